#include "hp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hp {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  for (size_t i = 0; i + 1 < p_.size(); ++i) {
    if (p_[i] < p_[i + 1]) throw Error("partition parts must be nonincreasing");
  }
  if (!p_.empty() && p_.back() < 0) throw Error("partition parts must be nonnegative");
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw Error("bad partition literal: '" + text + "'");
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
  if (length() > n) throw Error("partition longer than variable count");
  std::vector<int> v = p_;
  v.resize(n, 0);
  return v;
}

bool Partition::has_distinct_parts(int n) const {
  std::vector<int> v = padded(n);
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] == v[i + 1]) return false;
  }
  return true;
}

std::string Partition::str() const {
  if (p_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < p_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p_[i]);
  }
  return out;
}

std::string Partition::str_padded(int n) const {
  std::vector<int> v = padded(n);
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

Partition sort_to_partition(const std::vector<int>& gamma) {
  std::vector<int> v = gamma;
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  int n = std::max(mu.length(), lambda.length());
  int pm = 0, pl = 0;
  for (int i = 0; i < n; ++i) {
    pm += mu.part(i);
    pl += lambda.part(i);
    if (pm > pl) return false;
  }
  return true;
}

MultiplicityProfile mult_profile(const Partition& lambda, int n) {
  std::vector<int> v = lambda.padded(n);
  MultiplicityProfile prof;
  for (int x : v) {
    if (!prof.degrees.empty() && prof.degrees.back() == x) {
      ++prof.multiplicities.back();
    } else {
      prof.degrees.push_back(x);
      prof.multiplicities.push_back(1);
    }
  }
  prof.p = static_cast<int>(prof.degrees.size());
  int tail = 0;
  prof.shifted.resize(prof.p);
  for (int i = prof.p - 1; i >= 0; --i) {
    // \tilde l_i = d_i + theta * (n_{i+1} + ... + n_p)
    prof.shifted[i] = ThetaPoly({Rational(prof.degrees[i]), Rational(tail)});
    tail += prof.multiplicities[i];
  }
  return prof;
}

std::vector<FieldScalar> MultiplicityProfile::shifted_values(const ScalarContext& ctx) const {
  std::vector<FieldScalar> out;
  out.reserve(shifted.size());
  for (const auto& poly : shifted) {
    if (ctx.is_symbolic()) {
      out.push_back(FieldScalar::symbolic(ThetaRational(poly)));
    } else {
      out.push_back(ctx.rational(poly.eval(ctx.theta0())));
    }
  }
  return out;
}

Partition mult_partition(const Partition& lambda, int n) {
  MultiplicityProfile prof = mult_profile(lambda, n);
  std::vector<int> m = prof.multiplicities;
  std::sort(m.begin(), m.end(), std::greater<int>());
  return Partition(std::move(m));
}

std::vector<FieldScalar> ell_values(const Partition& lambda, int n, const ScalarContext& ctx) {
  std::vector<int> v = lambda.padded(n);
  std::vector<FieldScalar> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(ctx.integer(v[i]) + ctx.theta() * ctx.integer(n - 1 - i));
  }
  return out;
}

namespace {

void gen_partitions(int remaining, int max_part, int max_parts, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_parts == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(remaining - part, part, max_parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total, int max_parts) {
  std::vector<Partition> out;
  if (total < 0) return out;
  std::vector<int> cur;
  gen_partitions(total, total == 0 ? 1 : total, max_parts, cur, out);
  return out;
}

std::vector<Partition> enumerate_dominated(const Partition& lambda, int n) {
  std::vector<Partition> out;
  for (const Partition& mu : partitions_of(lambda.size(), n)) {
    if (dominance_leq(mu, lambda)) out.push_back(mu);
  }
  return out;
}

}  // namespace hp
