#include "hp/scalar.hpp"

namespace hp {

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  if (mode_ == ThetaMode::specialized) {
    r.rat_ = -rat_;
  } else {
    r.sym_ = -sym_;
  }
  return r;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_mode(o.mode_);
  FieldScalar r = *this;
  if (mode_ == ThetaMode::specialized) {
    r.rat_ = rat_ + o.rat_;
  } else {
    r.sym_ = sym_ + o.sym_;
  }
  return r;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_mode(o.mode_);
  FieldScalar r = *this;
  if (mode_ == ThetaMode::specialized) {
    r.rat_ = rat_ * o.rat_;
  } else {
    r.sym_ = sym_ * o.sym_;
  }
  return r;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  require_mode(o.mode_);
  FieldScalar r = *this;
  if (mode_ == ThetaMode::specialized) {
    r.rat_ = rat_ / o.rat_;
  } else {
    r.sym_ = sym_ / o.sym_;
  }
  return r;
}

FieldScalar FieldScalar::inverse() const {
  FieldScalar r = *this;
  if (mode_ == ThetaMode::specialized) {
    r.rat_ = rat_.inverse();
  } else {
    r.sym_ = sym_.inverse();
  }
  return r;
}

FieldScalar FieldScalar::pow(unsigned e) const {
  FieldScalar r = *this;
  if (mode_ == ThetaMode::specialized) {
    r.rat_ = rat_.pow(e);
  } else {
    r.sym_ = sym_.pow(e);
  }
  return r;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (mode_ != o.mode_) return false;
  return mode_ == ThetaMode::specialized ? rat_ == o.rat_ : sym_ == o.sym_;
}

bool FieldScalar::repr_less(const FieldScalar& o) const {
  if (mode_ != o.mode_) return mode_ < o.mode_;
  if (mode_ == ThetaMode::specialized) return rat_ < o.rat_;
  auto key = [](const ThetaRational& x) {
    std::string s = std::to_string(x.num().degree()) + "|" + std::to_string(x.den().degree());
    return s + "|" + x.str();
  };
  return key(sym_) < key(o.sym_);
}

Rational FieldScalar::eval_at(const Rational& theta0) const {
  if (mode_ == ThetaMode::specialized) return rat_;
  return sym_.eval(theta0);
}

ScalarContext ScalarContext::parse(const std::string& spec) {
  if (spec == "sym" || spec == "symbolic") return symbolic();
  return at(Rational::parse(spec));
}

}  // namespace hp
