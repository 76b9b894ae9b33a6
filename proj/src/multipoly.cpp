#include "hp/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace hp {

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

int total_degree(const ExponentVector& g) {
  return std::accumulate(g.begin(), g.end(), 0);
}

MultiPoly MultiPoly::constant(int nvars, const FieldScalar& c) {
  MultiPoly f(nvars, c.mode());
  f.add_term(ExponentVector(nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::monomial(ExponentVector g, const FieldScalar& c) {
  MultiPoly f(static_cast<int>(g.size()), c.mode());
  f.add_term(g, c);
  return f;
}

FieldScalar MultiPoly::coeff(const ExponentVector& g) const {
  auto it = terms_.find(g);
  if (it == terms_.end()) return FieldScalar::rational(Rational(0), mode_);
  return it->second;
}

void MultiPoly::add_term(const ExponentVector& g, const FieldScalar& c) {
  if (static_cast<int>(g.size()) != nvars_) throw Error("exponent size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_, mode_);
  for (const auto& [g1, c1] : terms_) {
    for (const auto& [g2, c2] : o.terms_) {
      ExponentVector g(nvars_);
      for (int i = 0; i < nvars_; ++i) g[i] = g1[i] + g2[i];
      r.add_term(g, c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_, mode_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

MultiPoly MultiPoly::scaled(const FieldScalar& c) const {
  MultiPoly r(nvars_, mode_);
  if (c.is_zero()) return r;
  for (const auto& [g, x] : terms_) r.terms_.emplace(g, x * c);
  return r;
}

MultiPoly MultiPoly::shifted(const ExponentVector& s) const {
  MultiPoly r(nvars_, mode_);
  for (const auto& [g, c] : terms_) {
    ExponentVector t(nvars_);
    for (int i = 0; i < nvars_; ++i) t[i] = g[i] + s[i];
    r.terms_.emplace(std::move(t), c);
  }
  return r;
}

MultiPoly MultiPoly::times_var(int i) const {
  ExponentVector s(nvars_, 0);
  s.at(i - 1) = 1;
  return shifted(s);
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  return total_degree(terms_.rbegin()->first) == d;
}

MultiPoly MultiPoly::homogeneous_part(int deg) const {
  MultiPoly r(nvars_, mode_);
  for (const auto& [g, c] : terms_) {
    if (total_degree(g) == deg) r.terms_.emplace(g, c);
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && mode_ == o.mode_ && terms_ == o.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (g[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (g[i] > 1) mono += "^" + std::to_string(g[i]);
    }
    if (mono.empty()) {
      out += cs;
    } else if (c.is_one()) {
      out += mono;
    } else {
      bool simple = cs.find_first_of("+-/ ") == std::string::npos ||
                    (cs[0] == '-' && cs.find_first_of("+-/ ", 1) == std::string::npos);
      out += (simple ? cs : "(" + cs + ")") + "*" + mono;
    }
  }
  return out;
}

MultiPoly permute_action(const Permutation& sigma, const MultiPoly& f) {
  if (sigma.n() != f.nvars()) throw Error("permutation size mismatch");
  MultiPoly r(f.nvars(), f.mode());
  for (const auto& [g, c] : f.terms()) r.add_term(sigma.apply(g), c);
  return r;
}

std::vector<ExponentVector> v_lambda_basis(const Partition& lambda, int n) {
  std::vector<int> v = lambda.padded(n);  // throws if lambda is too long
  std::sort(v.begin(), v.end());
  std::vector<ExponentVector> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::reverse(out.begin(), out.end());  // lex descending; degrees all equal
  return out;
}

MultiPoly monomial_symmetric(const Partition& lambda, int n, const ScalarContext& ctx) {
  MultiPoly f(n, ctx.mode());
  for (const auto& g : v_lambda_basis(lambda, n)) f.add_term(g, ctx.one());
  return f;
}

bool is_symmetric(const MultiPoly& f) {
  for (const Permutation& s : adjacent_transpositions(f.nvars())) {
    if (permute_action(s, f) != f) return false;
  }
  return true;
}

std::vector<std::pair<Partition, FieldScalar>> to_msym_basis(const MultiPoly& f) {
  if (!is_symmetric(f)) throw Error("polynomial is not symmetric");
  std::vector<std::pair<Partition, FieldScalar>> out;
  std::vector<Partition> seen;
  for (const auto& [g, c] : f.terms()) {
    Partition l = sort_to_partition(g);
    if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
    seen.push_back(l);
    out.emplace_back(l, c);
  }
  return out;
}

}  // namespace hp
