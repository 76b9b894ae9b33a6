#pragma once

#include <string>
#include <vector>

#include "hp/scalar.hpp"

namespace hp {

// Nonincreasing sequence of nonnegative integers. Stored trimmed (no trailing
// zeros) so equality is canonical; padded copies are made on demand.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);  // "3,1,0"

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const;                 // sum of parts
  int part(int i) const { return i < length() ? p_[i] : 0; }
  std::vector<int> padded(int n) const;
  bool empty() const { return p_.empty(); }
  bool has_distinct_parts(int n) const;  // as an n-tuple, zeros included

  bool operator==(const Partition& o) const { return p_ == o.p_; }
  bool operator!=(const Partition& o) const { return p_ != o.p_; }
  bool operator<(const Partition& o) const { return p_ < o.p_; }

  std::string str() const;  // comma-separated, "0" for the empty partition
  std::string str_padded(int n) const;

 private:
  std::vector<int> p_;
};

// Multiset-sort of an exponent sequence into a partition.
Partition sort_to_partition(const std::vector<int>& gamma);

// Dominance: true iff |mu| = |lambda| and every prefix sum of mu is at most
// the corresponding prefix sum of lambda. Unequal sizes compare false.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// Block profile of a partition padded to n variables: distinct degrees d
// (strictly decreasing), their multiplicities, and the shifted degrees
// d_i + theta * (count of entries in later blocks).
struct MultiplicityProfile {
  int p = 0;
  std::vector<int> degrees;         // d_1 > d_2 > ... > d_p >= 0
  std::vector<int> multiplicities;  // n_1, ..., n_p > 0, summing to n
  std::vector<ThetaPoly> shifted;   // \tilde l_i as polynomials in theta

  std::vector<FieldScalar> shifted_values(const ScalarContext& ctx) const;
};

MultiplicityProfile mult_profile(const Partition& lambda, int n);

// Multiplicity partition: the multiset of block sizes, sorted nonincreasing.
Partition mult_partition(const Partition& lambda, int n);

// l_i = lambda_i + theta (n - i), 1 <= i <= n.
std::vector<FieldScalar> ell_values(const Partition& lambda, int n, const ScalarContext& ctx);

// All partitions of total with at most max_parts parts.
std::vector<Partition> partitions_of(int total, int max_parts);

// All mu with |mu| = |lambda|, at most n parts, mu dominated by lambda
// (lambda included). Generate-and-filter; the sizes in play are tiny.
std::vector<Partition> enumerate_dominated(const Partition& lambda, int n);

}  // namespace hp
