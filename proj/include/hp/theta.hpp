#pragma once

#include <string>
#include <vector>

#include "hp/rational.hpp"

namespace hp {

// Dense univariate polynomial in the deformation parameter over the
// rationals. Coefficient i is the coefficient of the i-th power; the
// vector carries no trailing zeros, so the zero polynomial is the empty
// vector and reports degree -1.
class ThetaPoly {
 public:
  ThetaPoly() = default;
  explicit ThetaPoly(Rational constant);
  explicit ThetaPoly(std::vector<Rational> coeffs);

  static ThetaPoly theta();                       // the monomial of degree 1
  static ThetaPoly monomial(Rational c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  ThetaPoly operator-() const;
  ThetaPoly operator+(const ThetaPoly& o) const;
  ThetaPoly operator-(const ThetaPoly& o) const;
  ThetaPoly operator*(const ThetaPoly& o) const;
  ThetaPoly scaled(const Rational& c) const;

  // Euclidean division; throws on zero divisor.
  static void divrem(const ThetaPoly& a, const ThetaPoly& b, ThetaPoly& q, ThetaPoly& r);

  // Monic gcd, computed by the primitive-part Euclidean algorithm on
  // integer-cleared polynomials so coefficients stay small mid-run.
  static ThetaPoly gcd(const ThetaPoly& a, const ThetaPoly& b);

  ThetaPoly monic() const;
  Rational eval(const Rational& theta0) const;

  bool operator==(const ThetaPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ThetaPoly& o) const { return c_ != o.c_; }

  // Descending powers, explicit '*' and '^': "2*θ^2 - 1/2*θ + 3".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Reduced fraction of two ThetaPoly: the rational-function field in the
// deformation parameter. The denominator is monic and coprime to the
// numerator, so equal values have equal representations.
class ThetaRational {
 public:
  ThetaRational() : num_(), den_(ThetaPoly(Rational(1))) {}
  explicit ThetaRational(Rational constant)
      : num_(ThetaPoly(constant)), den_(ThetaPoly(Rational(1))) {}
  explicit ThetaRational(ThetaPoly p) : num_(std::move(p)), den_(ThetaPoly(Rational(1))) {}

  static ThetaRational reduce(const ThetaPoly& num, const ThetaPoly& den);
  static ThetaRational theta() { return ThetaRational(ThetaPoly::theta()); }

  const ThetaPoly& num() const { return num_; }
  const ThetaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  ThetaRational operator-() const;
  ThetaRational operator+(const ThetaRational& o) const;
  ThetaRational operator-(const ThetaRational& o) const;
  ThetaRational operator*(const ThetaRational& o) const;
  ThetaRational operator/(const ThetaRational& o) const;
  ThetaRational inverse() const;
  ThetaRational pow(unsigned e) const;

  // Exact substitution; throws, naming the denominator, on a pole.
  Rational eval(const Rational& theta0) const;

  bool operator==(const ThetaRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const ThetaRational& o) const { return !(*this == o); }

  // "num" when the denominator is 1, "(num)/(den)" otherwise.
  std::string str() const;

 private:
  ThetaRational(ThetaPoly num, ThetaPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  ThetaPoly num_;
  ThetaPoly den_;
};

}  // namespace hp
