#include "hp/theta.hpp"

#include <utility>

namespace hp {

namespace {

// Integer-cleared image of a rational-coefficient polynomial: primitive,
// positive leading coefficient.
std::vector<mpz_class> primitive_part(const std::vector<Rational>& c) {
  mpz_class common_den = 1;
  for (const auto& x : c) {
    mpz_class d = x.denominator();
    common_den = common_den / gcd(common_den, d) * d;
  }
  std::vector<mpz_class> z(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    z[i] = c[i].numerator() * (common_den / c[i].denominator());
  }
  mpz_class content = 0;
  for (const auto& v : z) content = gcd(content, v);
  if (content == 0) return {};
  if (z.back() < 0) content = -content;
  for (auto& v : z) v /= content;
  return z;
}

}  // namespace

ThetaPoly::ThetaPoly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

ThetaPoly::ThetaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

ThetaPoly ThetaPoly::theta() { return monomial(Rational(1), 1); }

ThetaPoly ThetaPoly::monomial(Rational c, int deg) {
  if (c.is_zero()) return ThetaPoly();
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = std::move(c);
  return ThetaPoly(std::move(v));
}

void ThetaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational ThetaPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

Rational ThetaPoly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

ThetaPoly ThetaPoly::operator-() const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return ThetaPoly(std::move(r));
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return ThetaPoly(std::move(r));
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const { return *this + (-o); }

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
  if (is_zero() || o.is_zero()) return ThetaPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return ThetaPoly(std::move(r));
}

ThetaPoly ThetaPoly::scaled(const Rational& c) const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
  return ThetaPoly(std::move(r));
}

void ThetaPoly::divrem(const ThetaPoly& a, const ThetaPoly& b, ThetaPoly& q, ThetaPoly& r) {
  if (b.is_zero()) throw Error("division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  Rational lb = b.leading();
  std::vector<Rational> quo;
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
  for (int d = a.degree(); d >= db; --d) {
    if (rem.size() <= static_cast<size_t>(d) || rem[d].is_zero()) continue;
    Rational f = rem[d] / lb;
    quo[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.c_[i];
  }
  q = ThetaPoly(std::move(quo));
  r = ThetaPoly(std::move(rem));
}

ThetaPoly ThetaPoly::gcd(const ThetaPoly& a, const ThetaPoly& b) {
  std::vector<mpz_class> u = primitive_part(a.c_);
  std::vector<mpz_class> v = primitive_part(b.c_);
  if (u.size() < v.size()) std::swap(u, v);
  // Primitive pseudo-remainder sequence.
  while (!v.empty()) {
    // prem(u, v): scale u by lc(v)^(deg u - deg v + 1), then divide.
    int du = static_cast<int>(u.size()) - 1;
    int dv = static_cast<int>(v.size()) - 1;
    mpz_class lv = v.back();
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lv.get_mpz_t(), du - dv + 1);
    for (auto& x : u) x *= scale;
    for (int d = du; d >= dv; --d) {
      if (u.size() <= static_cast<size_t>(d) || u[d] == 0) continue;
      mpz_class f = u[d] / lv;  // exact by the pre-scaling
      for (int i = 0; i <= dv; ++i) u[d - dv + i] -= f * v[i];
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    // Strip content to keep growth in check.
    if (!u.empty()) {
      mpz_class content = 0;
      for (const auto& x : u) content = ::gcd(content, x);
      if (u.back() < 0) content = -content;
      for (auto& x : u) x /= content;
    }
    std::swap(u, v);
  }
  if (u.empty()) return ThetaPoly();
  std::vector<Rational> r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = Rational(u[i]);
  return ThetaPoly(std::move(r)).monic();
}

ThetaPoly ThetaPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Rational ThetaPoly::eval(const Rational& theta0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * theta0 + *it;
  return acc;
}

std::string ThetaPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Rational c = c_[d];
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (d == 0) {
      out += c.str();
    } else {
      out += c.str();
      out += d == 1 ? "*θ" : "*θ^" + std::to_string(d);
    }
  }
  return out;
}

ThetaRational ThetaRational::reduce(const ThetaPoly& num, const ThetaPoly& den) {
  if (den.is_zero()) throw Error("division by zero");
  if (num.is_zero()) return ThetaRational();
  ThetaPoly g = ThetaPoly::gcd(num, den);
  ThetaPoly n, d, r;
  ThetaPoly::divrem(num, g, n, r);
  ThetaPoly::divrem(den, g, d, r);
  Rational lead = d.leading();
  return ThetaRational(n.scaled(lead.inverse()), d.monic());
}

ThetaRational ThetaRational::operator-() const { return ThetaRational(-num_, den_); }

ThetaRational ThetaRational::operator+(const ThetaRational& o) const {
  return reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ThetaRational ThetaRational::operator-(const ThetaRational& o) const { return *this + (-o); }

ThetaRational ThetaRational::operator*(const ThetaRational& o) const {
  return reduce(num_ * o.num_, den_ * o.den_);
}

ThetaRational ThetaRational::operator/(const ThetaRational& o) const {
  if (o.is_zero()) throw Error("division by zero");
  return reduce(num_ * o.den_, den_ * o.num_);
}

ThetaRational ThetaRational::inverse() const {
  if (is_zero()) throw Error("division by zero");
  return reduce(den_, num_);
}

ThetaRational ThetaRational::pow(unsigned e) const {
  ThetaRational acc{Rational(1)};
  ThetaRational base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

Rational ThetaRational::eval(const Rational& theta0) const {
  Rational d = den_.eval(theta0);
  if (d.is_zero()) {
    throw Error("pole at θ = " + theta0.str() + ": denominator " + den_.str() + " vanishes");
  }
  return num_.eval(theta0) / d;
}

std::string ThetaRational::str() const {
  if (den_.degree() == 0) {
    // Monic constant denominator is exactly 1.
    return num_.str();
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace hp
