#include "hp/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hp/fault.hpp"

namespace hp {

namespace {

// Beta-set of a partition with exactly len entries: parts[i] + (len - 1 - i).
std::vector<int> beta_set(const Partition& p, int len) {
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = p.part(i) + (len - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int len = static_cast<int>(beta.size());
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
  return Partition(std::move(parts));
}

// chi^lambda at the class whose parts are rho[idx..]; border strips are
// removed through the beta-set encoding: subtracting a part from one beta
// number, with sign given by the number of beta values jumped over.
mpz_class mn_recurse(const Partition& lambda, const std::vector<int>& rho, size_t idx,
                     std::map<std::pair<std::vector<int>, size_t>, mpz_class>& memo) {
  if (idx == rho.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda.parts(), idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = rho[idx];
  int len = std::max(lambda.length(), 1);
  std::vector<int> beta = beta_set(lambda, len);
  mpz_class total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int v : beta) {
      if (v > target && v < beta[i]) ++jumped;
    }
    std::vector<int> nb = beta;
    nb[i] = target;
    mpz_class sub = mn_recurse(from_beta(std::move(nb)), rho, idx + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

Rational character(const Partition& tau, const Partition& cycle_type) {
  if (tau.size() != cycle_type.size()) throw Error("character: size mismatch");
  std::map<std::pair<std::vector<int>, size_t>, mpz_class> memo;
  return Rational(mn_recurse(tau, cycle_type.parts(), 0, memo));
}

mpz_class dim_irrep(const Partition& tau, int n) {
  if (tau.size() != n) throw Error("dim_irrep: size mismatch");
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = tau.part(i) + (n - 1 - i);
  mpz_class num = factorial(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) num *= mu[i] - mu[j];
  }
  mpz_class den = 1;
  for (int i = 0; i < n; ++i) den *= factorial(mu[i]);
  if (num % den != 0) throw Error("dim_irrep: nonintegral result");
  return num / den;
}

Rational character_one_cycle(const Partition& tau, int k, int n) {
  if (k < 1 || k > n) throw Error("cycle length out of range");
  if (tau.size() != n) throw Error("character_one_cycle: size mismatch");
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = tau.part(i) + (n - 1 - i);
  Rational sum(0);
  for (int i = 0; i < n; ++i) {
    // Falling factorial mu_i (mu_i - 1) ... (mu_i - k + 1); vanishes when the
    // range crosses zero.
    mpz_class ff = 1;
    for (int t = 0; t < k; ++t) ff *= mu[i] - t;
    if (ff == 0) continue;
    Rational prod{ff};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      prod *= Rational(mpz_class(mu[i] - mu[j] - k), mpz_class(mu[i] - mu[j]));
    }
    sum += prod;
  }
  Rational result = Rational(dim_irrep(tau, n)) *
                    Rational(factorial(n - k), factorial(n)) * sum;
  if (!result.is_integer()) throw Error("character_one_cycle: nonintegral result");
  return result;
}

mpz_class centralizer_order(const Partition& cycle_type) {
  mpz_class z = 1;
  const auto& parts = cycle_type.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), parts[i], j - i);
    z *= pw * factorial(j - i);
    i = j;
  }
  return z;
}

mpz_class class_size(const Partition& cycle_type, int n) {
  if (cycle_type.size() != n) throw Error("class_size: size mismatch");
  return factorial(n) / centralizer_order(cycle_type);
}

void AveragedCharacterSpec::validate(int n) const {
  int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (total != n) throw Error("block sizes must sum to n");
  for (int b : block_sizes) {
    if (b < 1) throw Error("block sizes must be positive");
  }
  if (subset.empty()) throw Error("subset must be nonempty");
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > static_cast<int>(block_sizes.size())) {
      throw Error("subset index out of range");
    }
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw Error("subset must be strictly increasing");
    }
  }
}

Permutation AveragedCharacterSpec::joining_cycle(int n) const {
  std::vector<int> elems;
  for (int a : subset) {
    int pos = 0;
    for (int i = 0; i < a; ++i) pos += block_sizes[i];
    elems.push_back(pos);  // last element of block a, 1-based
  }
  return Permutation::cycle(n, elems);
}

namespace {

struct BlockChoice {
  Rational weight;     // permutation count, times the marked-cycle fraction
  std::vector<int> unmarked;  // cycle lengths passed through unchanged
  int marked = 0;             // length of the cycle through the marked point
};

// Choices for one block: every cycle type; for selected blocks additionally
// a marked part (the cycle containing the block's distinguished element),
// weighted by the fraction of permutations of that type whose marked cycle
// has that length.
std::vector<BlockChoice> block_choices(int size, bool selected) {
  std::vector<BlockChoice> out;
  for (const Partition& mu : partitions_of(size, size)) {
    Rational perms{Rational(factorial(size)) / Rational(centralizer_order(mu))};
    if (!selected) {
      out.push_back(BlockChoice{perms, mu.parts(), 0});
      continue;
    }
    std::vector<int> distinct;
    for (int part : mu.parts()) {
      if (std::find(distinct.begin(), distinct.end(), part) != distinct.end()) continue;
      distinct.push_back(part);
      int mult = static_cast<int>(std::count(mu.parts().begin(), mu.parts().end(), part));
      Rational fraction(static_cast<long>(part) * mult, size);
      std::vector<int> rest;
      bool removed = false;
      for (int q : mu.parts()) {
        if (!removed && q == part) {
          removed = true;
          continue;
        }
        rest.push_back(q);
      }
      out.push_back(BlockChoice{perms * fraction, std::move(rest), part});
    }
  }
  return out;
}

}  // namespace

Rational averaged_character(const Partition& tau, const AveragedCharacterSpec& spec) {
  int n = tau.size();
  spec.validate(n);
  int p = static_cast<int>(spec.block_sizes.size());
  std::vector<bool> selected(p, false);
  for (int a : spec.subset) selected[a - 1] = true;

  // The product g~ * c merges, across the selected blocks, the cycles through
  // the marked points into one cycle of the summed length; all other cycles
  // pass through unchanged. Summing over (cycle type, marked length) choices
  // per block turns the Young-subgroup average into partition-indexed work.
  Rational total(0);
  std::vector<int> carried;
  std::function<void(int, Rational, int)> recurse = [&](int block, Rational weight,
                                                        int merged_len) {
    if (block == p) {
      std::vector<int> type = carried;
      type.push_back(merged_len);
      total += weight * character(tau, sort_to_partition(type));
      return;
    }
    for (const BlockChoice& choice : block_choices(spec.block_sizes[block], selected[block])) {
      size_t before = carried.size();
      carried.insert(carried.end(), choice.unmarked.begin(), choice.unmarked.end());
      recurse(block + 1, weight * choice.weight, merged_len + choice.marked);
      carried.resize(before);
    }
  };
  recurse(0, Rational(1), 0);

  mpz_class young_order = 1;
  for (int b : spec.block_sizes) young_order *= factorial(b);
  Rational result = total / Rational(young_order);
  if (injected_fault() == Fault::avgchar_norm) result *= Rational(2);
  return result;
}

Rational averaged_character_n11(const AveragedCharacterSpec& spec) {
  int p = static_cast<int>(spec.block_sizes.size());
  Rational r(p - 1);
  for (int a : spec.subset) r -= Rational(1, spec.block_sizes[a - 1]);
  return r;
}

Rational spherical_p2(int n, int eta, int k) {
  if (eta < 1 || eta > n - 1) throw Error("eta out of range");
  if (k < 0 || k > std::min(eta, n - eta)) throw Error("k out of range");
  return Rational(1) - Rational(static_cast<long>(k) * (n - k + 1),
                                static_cast<long>(eta) * (n - eta));
}

CharacterTable::CharacterTable(int n) : n_(n) {
  taus_ = partitions_of(n, n);
  values_.resize(taus_.size());
  for (size_t t = 0; t < taus_.size(); ++t) {
    values_[t].reserve(taus_.size());
    for (const Partition& cls : taus_) {
      values_[t].push_back(character(taus_[t], cls));
    }
  }
  // Column orthogonality: sum_tau chi(c) chi(c') = z_c [c = c'].
  for (size_t c1 = 0; c1 < taus_.size(); ++c1) {
    for (size_t c2 = c1; c2 < taus_.size(); ++c2) {
      Rational sum(0);
      for (size_t t = 0; t < taus_.size(); ++t) sum += values_[t][c1] * values_[t][c2];
      Rational expected = c1 == c2 ? Rational(centralizer_order(taus_[c1])) : Rational(0);
      if (sum != expected) throw Error("character table failed column orthogonality");
    }
  }
}

Rational CharacterTable::value(const Partition& tau, const Partition& cls) const {
  for (size_t t = 0; t < taus_.size(); ++t) {
    if (taus_[t] == tau) {
      for (size_t c = 0; c < taus_.size(); ++c) {
        if (taus_[c] == cls) return values_[t][c];
      }
    }
  }
  throw Error("partition not in table");
}

mpz_class CharacterTable::dim(const Partition& tau) const { return dim_irrep(tau, n_); }

ExactMatrix permutation_matrix(const Permutation& g, const Partition& lambda, int n,
                               ThetaMode mode) {
  std::vector<ExponentVector> basis = v_lambda_basis(lambda, n);
  std::map<ExponentVector, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  ExactMatrix m(static_cast<int>(basis.size()), static_cast<int>(basis.size()), mode);
  for (size_t j = 0; j < basis.size(); ++j) {
    m.at(index.at(g.apply(basis[j])), static_cast<int>(j)) =
        FieldScalar::rational(Rational(1), mode);
  }
  return m;
}

ExactMatrix projector_matrix(const Partition& tau, const Partition& lambda, int n,
                             const ScalarContext& ctx) {
  if (tau.size() != n) throw Error("projector: tau must be a partition of n");
  std::vector<ExponentVector> basis = v_lambda_basis(lambda, n);
  std::map<ExponentVector, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  int dim = static_cast<int>(basis.size());
  Rational scale{Rational(dim_irrep(tau, n)) / Rational(factorial(n))};
  ExactMatrix m(dim, dim, ctx.mode());
  for (const Permutation& g : all_permutations(n)) {
    FieldScalar c = ctx.rational(character(tau, g.cycle_type()) * scale);
    if (c.is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      m.at(index.at(g.apply(basis[j])), j) += c;
    }
  }
  return m;
}

int isotypic_dimension(const Partition& lambda, const Partition& tau, int n) {
  if (tau.size() != n) throw Error("isotypic_dimension: tau must be a partition of n");
  std::vector<ExponentVector> basis = v_lambda_basis(lambda, n);
  Rational scale{Rational(dim_irrep(tau, n)) / Rational(factorial(n))};
  Rational trace(0);
  for (const Permutation& g : all_permutations(n)) {
    long fixed = 0;
    for (const auto& b : basis) {
      if (g.apply(b) == b) ++fixed;
    }
    trace += Rational(fixed) * character(tau, g.cycle_type()) * scale;
  }
  if (!trace.is_integer() || trace.sign() < 0) {
    throw Error("isotypic dimension must be a nonnegative integer");
  }
  return static_cast<int>(trace.numerator().get_si());
}

}  // namespace hp
