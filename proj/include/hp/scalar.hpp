#pragma once

#include <string>

#include "hp/rational.hpp"
#include "hp/theta.hpp"

namespace hp {

enum class ThetaMode { specialized, symbolic };

// A scalar in the coefficient field: a plain rational when the deformation
// parameter is specialized to a fixed rational value, a reduced rational
// function in it otherwise. Scalars of different modes never mix; every
// arithmetic operator checks.
class FieldScalar {
 public:
  FieldScalar() : mode_(ThetaMode::specialized), rat_(0) {}

  static FieldScalar rational(Rational r, ThetaMode mode) {
    FieldScalar s;
    s.mode_ = mode;
    if (mode == ThetaMode::specialized) {
      s.rat_ = std::move(r);
    } else {
      s.sym_ = ThetaRational(std::move(r));
    }
    return s;
  }
  static FieldScalar symbolic(ThetaRational v) {
    FieldScalar s;
    s.mode_ = ThetaMode::symbolic;
    s.sym_ = std::move(v);
    return s;
  }

  ThetaMode mode() const { return mode_; }
  const Rational& rat() const {
    require_mode(ThetaMode::specialized);
    return rat_;
  }
  const ThetaRational& sym() const {
    require_mode(ThetaMode::symbolic);
    return sym_;
  }

  bool is_zero() const {
    return mode_ == ThetaMode::specialized ? rat_.is_zero() : sym_.is_zero();
  }
  bool is_one() const {
    return mode_ == ThetaMode::specialized ? rat_.is_one() : sym_.is_one();
  }

  FieldScalar operator-() const;
  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
  FieldScalar inverse() const;
  FieldScalar pow(unsigned e) const;

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  // Deterministic total order (mode, then representation); used for stable
  // sorting of spectra, not for magnitude comparisons.
  bool repr_less(const FieldScalar& o) const;

  // Exact substitution of a symbolic scalar.
  Rational eval_at(const Rational& theta0) const;

  std::string str() const {
    return mode_ == ThetaMode::specialized ? rat_.str() : sym_.str();
  }

 private:
  void require_mode(ThetaMode m) const {
    if (mode_ != m) throw Error("scalar mode mismatch");
  }
  ThetaMode mode_;
  Rational rat_;
  ThetaRational sym_;
};

// Ambient field description: the mode plus, when specialized, the value of
// the deformation parameter. All scalar construction goes through here so a
// computation can run identically in either mode.
class ScalarContext {
 public:
  explicit ScalarContext(Rational theta0)
      : mode_(ThetaMode::specialized), theta0_(std::move(theta0)) {}
  ScalarContext() : mode_(ThetaMode::symbolic), theta0_(0) {}

  static ScalarContext symbolic() { return ScalarContext(); }
  static ScalarContext at(Rational theta0) { return ScalarContext(std::move(theta0)); }
  // "sym" or a rational literal such as "1/2".
  static ScalarContext parse(const std::string& spec);

  ThetaMode mode() const { return mode_; }
  bool is_symbolic() const { return mode_ == ThetaMode::symbolic; }
  const Rational& theta0() const {
    if (mode_ != ThetaMode::specialized) throw Error("no specialized value in symbolic mode");
    return theta0_;
  }

  FieldScalar zero() const { return FieldScalar::rational(Rational(0), mode_); }
  FieldScalar one() const { return FieldScalar::rational(Rational(1), mode_); }
  FieldScalar integer(long n) const { return FieldScalar::rational(Rational(n), mode_); }
  FieldScalar rational(Rational r) const { return FieldScalar::rational(std::move(r), mode_); }
  FieldScalar theta() const {
    if (mode_ == ThetaMode::specialized) return FieldScalar::rational(theta0_, mode_);
    return FieldScalar::symbolic(ThetaRational::theta());
  }

  std::string theta_str() const { return is_symbolic() ? "sym" : theta0_.str(); }

 private:
  ThetaMode mode_;
  Rational theta0_;
};

}  // namespace hp
