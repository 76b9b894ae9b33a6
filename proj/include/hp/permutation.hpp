#pragma once

#include <vector>

#include "hp/partition.hpp"

namespace hp {

// Bijection on {1, ..., n}, stored 0-based. Acting on polynomials it renames
// variable i to variable sigma(i); composition a*b applies b first, so that
// (1,3)(1,2) = (1,2,3).
class Permutation {
 public:
  explicit Permutation(int n);                       // identity
  explicit Permutation(std::vector<int> images0);    // 0-based images

  static Permutation transposition(int n, int i, int j);  // 1-based i, j
  static Permutation cycle(int n, const std::vector<int>& elems);  // 1-based

  int n() const { return static_cast<int>(img_.size()); }
  int map0(int i) const { return img_[i]; }  // 0-based application

  Permutation operator*(const Permutation& o) const;  // apply o first
  Permutation inverse() const;
  bool is_identity() const;
  int parity() const;  // +1 or -1

  // Image of an exponent vector: entry i moves to slot sigma(i).
  std::vector<int> apply(const std::vector<int>& gamma) const;

  Partition cycle_type() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }

 private:
  std::vector<int> img_;
};

// All n! permutations (n small).
std::vector<Permutation> all_permutations(int n);

// All adjacent transpositions (i, i+1), 1 <= i < n.
std::vector<Permutation> adjacent_transpositions(int n);

// The Young subgroup S_{n_1} x ... x S_{n_p} acting on consecutive blocks.
std::vector<Permutation> young_subgroup(const std::vector<int>& block_sizes);

// A permutation with the given cycle type, filling 1, 2, ... consecutively.
Permutation class_representative(const Partition& cycle_type, int n);

}  // namespace hp
