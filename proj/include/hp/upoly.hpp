#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hp/scalar.hpp"

namespace hp {

// Univariate polynomial in an indeterminate t with FieldScalar coefficients,
// stored ascending with no trailing zeros. Carries the characteristic
// polynomials produced by the matrix module and the factor bookkeeping of
// the spectrum reports.
class UPoly {
 public:
  explicit UPoly(ThetaMode mode) : mode_(mode) {}
  UPoly(ThetaMode mode, std::vector<FieldScalar> ascending);

  static UPoly constant(const FieldScalar& c);
  // t - root
  static UPoly linear_root(const FieldScalar& root);
  // monic t^2 + b t + c
  static UPoly quadratic(const FieldScalar& b, const FieldScalar& c);

  ThetaMode mode() const { return mode_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  FieldScalar coeff(int i) const;
  const std::vector<FieldScalar>& coeffs() const { return c_; }
  bool is_monic() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly pow(unsigned e) const;
  FieldScalar eval(const FieldScalar& x) const;

  static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  // Quotient when the division is exact, nullopt otherwise.
  std::optional<UPoly> exact_div(const UPoly& d) const;
  // Strips an exact factor of t^k; throws if the low coefficients are nonzero.
  UPoly shift_down(int k) const;

  bool operator==(const UPoly& o) const { return mode_ == o.mode_ && c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  ThetaMode mode_;
  std::vector<FieldScalar> c_;
};

// A factored (or partially factored) monic polynomial: linear and quadratic
// pieces with multiplicities plus an optional unfactored residual.
struct UFactor {
  UPoly factor;      // monic, degree 1 or 2 (or higher for the residual)
  int multiplicity = 1;
  bool residual = false;  // true when the piece resisted exact factoring
};

// Extracts rational roots (and, for what remains, quadratic factors when a
// degree-2 or perfect-square / resolvent split exists) from a monic
// polynomial over the specialized field. Anything left is returned as a
// residual piece. Symbolic-mode inputs are returned whole.
std::vector<UFactor> factor_monic(const UPoly& p);

}  // namespace hp
