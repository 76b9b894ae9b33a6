#pragma once

#include <vector>

#include "hp/matrix.hpp"
#include "hp/multipoly.hpp"
#include "hp/partition.hpp"
#include "hp/rational.hpp"

namespace hp {

// Symmetric-group characters and the isotypic machinery built from them.
// Characters are computed by the Murnaghan-Nakayama recursion on beta-sets,
// memoized; everything here is exact integer/rational arithmetic.

// Irreducible character chi^tau evaluated at the conjugacy class with the
// given cycle type. Both partitions must have the same size.
Rational character(const Partition& tau, const Partition& cycle_type);

// Dimension of the irreducible labeled by tau inside S_n, by the product
// formula over shifted parts.
mpz_class dim_irrep(const Partition& tau, int n);

// chi^tau at the class of a single k-cycle, via the shifted-parts sum with
// falling factorials (terms that cross zero vanish). Agrees with character()
// at the class (k, 1^{n-k}).
Rational character_one_cycle(const Partition& tau, int k, int n);

// Order of the centralizer of the class: prod_j j^{m_j} m_j!.
mpz_class centralizer_order(const Partition& cycle_type);
mpz_class class_size(const Partition& cycle_type, int n);

// Averaged character ("spherical function"): blocks of sizes n_1..n_p, a
// subset A = {a_1 < ... < a_k} of block indices (1-based), and the average
// over the Young subgroup of chi^tau(g * c), where c is a k-cycle through
// one marked element of each selected block.
struct AveragedCharacterSpec {
  std::vector<int> block_sizes;  // n_1, ..., n_p, summing to n
  std::vector<int> subset;       // strictly increasing, nonempty, 1-based

  void validate(int n) const;
  // The joining cycle through the last element of each selected block.
  Permutation joining_cycle(int n) const;
};

Rational averaged_character(const Partition& tau, const AveragedCharacterSpec& spec);

// Closed form of the above for tau = (n-1, 1): p - 1 - sum_{a in A} 1/n_a.
// Valid when the cycle joins at least two blocks; a singleton subset means
// the identity cycle, whose average is p - 1 instead.
Rational averaged_character_n11(const AveragedCharacterSpec& spec);

// Two-block spherical value at a 2-cycle: 1 - k(n-k+1) / (eta (n-eta)).
Rational spherical_p2(int n, int eta, int k);

// All character values for S_n, built once and checked for column
// orthogonality.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& irreps() const { return taus_; }
  const std::vector<Partition>& classes() const { return taus_; }  // same index set
  Rational value(const Partition& tau, const Partition& cls) const;
  mpz_class dim(const Partition& tau) const;

 private:
  int n_;
  std::vector<Partition> taus_;
  std::vector<std::vector<Rational>> values_;  // [tau][class]
};

// Matrix of the central projector (dim tau / n!) sum_g chi^tau(g) g on the
// monomial basis of the rearrangement class of lambda.
ExactMatrix projector_matrix(const Partition& tau, const Partition& lambda, int n,
                             const ScalarContext& ctx);

// Trace of the projector: the dimension of the tau-isotypic component.
// Zero unless the multiplicity partition of lambda is dominated by tau.
int isotypic_dimension(const Partition& lambda, const Partition& tau, int n);

// 0/1 matrix of a variable permutation on the same basis.
ExactMatrix permutation_matrix(const Permutation& g, const Partition& lambda, int n,
                               ThetaMode mode);

}  // namespace hp
