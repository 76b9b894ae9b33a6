#include "hp/upoly.hpp"

#include <algorithm>

namespace hp {

UPoly::UPoly(ThetaMode mode, std::vector<FieldScalar> ascending)
    : mode_(mode), c_(std::move(ascending)) {
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldScalar& c) { return UPoly(c.mode(), {c}); }

UPoly UPoly::linear_root(const FieldScalar& root) {
  FieldScalar one = FieldScalar::rational(Rational(1), root.mode());
  return UPoly(root.mode(), {-root, one});
}

UPoly UPoly::quadratic(const FieldScalar& b, const FieldScalar& c) {
  FieldScalar one = FieldScalar::rational(Rational(1), b.mode());
  return UPoly(b.mode(), {c, b, one});
}

FieldScalar UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) {
    return FieldScalar::rational(Rational(0), mode_);
  }
  return c_[i];
}

bool UPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<FieldScalar> r(std::max(c_.size(), o.c_.size()),
                             FieldScalar::rational(Rational(0), mode_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(mode_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<FieldScalar> r(std::max(c_.size(), o.c_.size()),
                             FieldScalar::rational(Rational(0), mode_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(mode_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(mode_);
  std::vector<FieldScalar> r(c_.size() + o.c_.size() - 1,
                             FieldScalar::rational(Rational(0), mode_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(mode_, std::move(r));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly acc = constant(FieldScalar::rational(Rational(1), mode_));
  UPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

FieldScalar UPoly::eval(const FieldScalar& x) const {
  FieldScalar acc = FieldScalar::rational(Rational(0), mode_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void UPoly::divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error("division by zero");
  std::vector<FieldScalar> rem = a.c_;
  int db = b.degree();
  FieldScalar lb = b.c_.back();
  std::vector<FieldScalar> quo;
  if (a.degree() >= db) {
    quo.assign(a.degree() - db + 1, FieldScalar::rational(Rational(0), a.mode_));
  }
  for (int d = a.degree(); d >= db; --d) {
    if (rem.size() <= static_cast<size_t>(d) || rem[d].is_zero()) continue;
    FieldScalar f = rem[d] / lb;
    quo[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.c_[i];
  }
  q = UPoly(a.mode_, std::move(quo));
  r = UPoly(a.mode_, std::move(rem));
}

std::optional<UPoly> UPoly::exact_div(const UPoly& d) const {
  UPoly q(mode_), r(mode_);
  divrem(*this, d, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UPoly UPoly::shift_down(int k) const {
  for (int i = 0; i < k; ++i) {
    if (!coeff(i).is_zero()) throw Error("shift_down: nonzero low coefficient");
  }
  std::vector<FieldScalar> r(c_.begin() + std::min<size_t>(k, c_.size()), c_.end());
  return UPoly(mode_, std::move(r));
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const FieldScalar& c = c_[d];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool simple = cs.find_first_of("+ ") == std::string::npos &&
                  cs.find('-', 1) == std::string::npos;
    if (!out.empty()) {
      if (simple && cs[0] == '-') {
        out += " - ";
        cs = cs.substr(1);
      } else {
        out += " + ";
      }
    }
    if (d == 0) {
      out += simple ? cs : "(" + cs + ")";
      continue;
    }
    std::string pw = d == 1 ? var : var + "^" + std::to_string(d);
    if (cs == "1") {
      out += pw;
    } else {
      out += (simple ? cs : "(" + cs + ")") + "*" + pw;
    }
  }
  return out;
}

namespace {

UPoly derivative(const UPoly& p) {
  if (p.degree() < 1) return UPoly(p.mode());
  std::vector<FieldScalar> r;
  r.reserve(p.degree());
  for (int i = 1; i <= p.degree(); ++i) {
    r.push_back(p.coeff(i) * FieldScalar::rational(Rational(i), p.mode()));
  }
  return UPoly(p.mode(), std::move(r));
}

UPoly monic_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q(a.mode()), r(a.mode());
    UPoly::divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  UPoly lead = UPoly::constant(a.coeff(a.degree()));
  return *a.exact_div(lead);
}

// Yun's square-free decomposition of a monic polynomial: returns pairs
// (square-free factor, multiplicity).
std::vector<std::pair<UPoly, int>> squarefree(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> parts;
  UPoly fp = derivative(f);
  UPoly a0 = monic_gcd(f, fp);
  UPoly b = *f.exact_div(a0);
  UPoly c = *fp.exact_div(a0) - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    UPoly ai = monic_gcd(b, c);
    if (ai.degree() > 0) parts.emplace_back(ai, i);
    b = *b.exact_div(ai);
    c = *c.exact_div(ai) - derivative(b);
    ++i;
  }
  return parts;
}

// Divisor-scan cutoff: beyond this constant-term magnitude the rational-root
// scan is skipped and the piece is reported as a residual.
const mpz_class kScanCap = mpz_class("1000000000000");

// Rational roots of a square-free monic polynomial over Q.
std::vector<Rational> rational_roots_squarefree(UPoly cur, UPoly* residual) {
  std::vector<Rational> roots;
  auto zero = FieldScalar::rational(Rational(0), ThetaMode::specialized);
  while (cur.degree() >= 1 && cur.coeff(0).is_zero()) {
    roots.emplace_back(0);
    cur = cur.shift_down(1);
  }
  if (cur.degree() >= 1) {
    mpz_class den = 1;
    for (int i = 0; i <= cur.degree(); ++i) {
      mpz_class d = cur.coeff(i).rat().denominator();
      den = den / gcd(den, d) * d;
    }
    std::vector<mpz_class> a(cur.degree() + 1);
    for (int i = 0; i <= cur.degree(); ++i) {
      Rational c = cur.coeff(i).rat();
      a[i] = c.numerator() * (den / c.denominator());
    }
    mpz_class a0 = abs(a[0]), an = abs(a.back());
    if (a0 <= kScanCap && an <= kScanCap) {
      std::vector<mpz_class> ps, qs;
      for (mpz_class d = 1; d * d <= a0; ++d) {
        if (a0 % d == 0) {
          ps.push_back(d);
          if (d * d != a0) ps.push_back(a0 / d);
        }
      }
      for (mpz_class d = 1; d * d <= an; ++d) {
        if (an % d == 0) {
          qs.push_back(d);
          if (d * d != an) qs.push_back(an / d);
        }
      }
      for (const auto& pp : ps) {
        for (const auto& qq : qs) {
          if (gcd(pp, qq) != 1) continue;
          for (int s = 0; s < 2; ++s) {
            Rational cand(s == 0 ? pp : mpz_class(-pp), qq);
            if (cur.degree() >= 1 &&
                cur.eval(FieldScalar::rational(cand, ThetaMode::specialized)).is_zero()) {
              roots.push_back(cand);
              cur = *cur.exact_div(UPoly::linear_root(
                  FieldScalar::rational(cand, ThetaMode::specialized)));
            }
          }
        }
      }
    }
  }
  *residual = cur;
  return roots;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.numerator(), d = r.denominator(), sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

// Splits a square-free monic rational quartic with no rational roots into two
// monic quadratics, via a rational root of the cubic resolvent.
std::optional<std::pair<UPoly, UPoly>> split_quartic(const UPoly& p) {
  auto S = [&](int i) { return p.coeff(i).rat(); };
  Rational a = S(3), b = S(2), c = S(1), d = S(0);
  UPoly resolvent(
      ThetaMode::specialized,
      {FieldScalar::rational(-(a * a * d - Rational(4) * b * d + c * c), ThetaMode::specialized),
       FieldScalar::rational(a * c - Rational(4) * d, ThetaMode::specialized),
       FieldScalar::rational(-b, ThetaMode::specialized),
       FieldScalar::rational(Rational(1), ThetaMode::specialized)});
  UPoly rem(ThetaMode::specialized);
  for (const Rational& y : rational_roots_squarefree(resolvent, &rem)) {
    auto disc = rational_sqrt(a * a - Rational(4) * (b - y));
    if (!disc) continue;
    Rational p1 = (a + *disc) / Rational(2), p2 = (a - *disc) / Rational(2);
    Rational q1, q2;
    if (p1 != p2) {
      q1 = (c - p1 * y) / (p2 - p1);
      q2 = y - q1;
    } else {
      auto dq = rational_sqrt(y * y - Rational(4) * d);
      if (!dq) continue;
      q1 = (y + *dq) / Rational(2);
      q2 = (y - *dq) / Rational(2);
    }
    UPoly f1 = UPoly::quadratic(FieldScalar::rational(p1, ThetaMode::specialized),
                                FieldScalar::rational(q1, ThetaMode::specialized));
    UPoly f2 = UPoly::quadratic(FieldScalar::rational(p2, ThetaMode::specialized),
                                FieldScalar::rational(q2, ThetaMode::specialized));
    if ((f1 * f2) == p) return std::make_pair(f1, f2);
  }
  return std::nullopt;
}

void add_factor(std::vector<UFactor>& out, const UPoly& f, int mult, bool residual) {
  for (auto& uf : out) {
    if (uf.factor == f && uf.residual == residual) {
      uf.multiplicity += mult;
      return;
    }
  }
  out.push_back(UFactor{f, mult, residual});
}

}  // namespace

std::vector<UFactor> factor_monic(const UPoly& p) {
  if (!p.is_monic()) throw Error("factor_monic: input not monic");
  std::vector<UFactor> out;
  if (p.degree() == 0) return out;
  if (p.mode() == ThetaMode::symbolic) {
    out.push_back(UFactor{p, 1, p.degree() > 2});
    return out;
  }
  for (const auto& [part, mult] : squarefree(p)) {
    UPoly rem(ThetaMode::specialized);
    for (const Rational& r : rational_roots_squarefree(part, &rem)) {
      add_factor(out, UPoly::linear_root(FieldScalar::rational(r, ThetaMode::specialized)),
                 mult, false);
    }
    if (rem.degree() == 0) continue;
    if (rem.degree() == 2) {
      add_factor(out, rem, mult, false);
    } else if (rem.degree() == 4) {
      if (auto pair = split_quartic(rem)) {
        add_factor(out, pair->first, mult, false);
        add_factor(out, pair->second, mult, false);
      } else {
        add_factor(out, rem, mult, true);
      }
    } else {
      add_factor(out, rem, mult, true);
    }
  }
  return out;
}

}  // namespace hp
