#pragma once

#include <vector>

#include "hp/scalar.hpp"
#include "hp/upoly.hpp"

namespace hp {

inline constexpr int kDefaultSymbolicCap = 24;

// Dense matrix over the coefficient field (one mode for all entries).
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, ThetaMode mode);
  static ExactMatrix identity(int n, ThetaMode mode);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ThetaMode mode() const { return mode_; }

  FieldScalar& at(int r, int c) { return e_[r * cols_ + c]; }
  const FieldScalar& at(int r, int c) const { return e_[r * cols_ + c]; }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const FieldScalar& c) const;
  ExactMatrix pow(unsigned m) const;
  ExactMatrix transpose() const;
  FieldScalar trace() const;
  bool operator==(const ExactMatrix& o) const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  ThetaMode mode_;
  std::vector<FieldScalar> e_;
};

// Monic characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
// recurrence, which needs only ring operations and division by integers.
// Symbolic-mode inputs above the cap are rejected with a hard error; pass a
// specialized context (or raise the cap) for large matrices.
UPoly charpoly(const ExactMatrix& m, int symbolic_cap = kDefaultSymbolicCap);

// Reduced row echelon form, in place; returns pivot column indices.
std::vector<int> rref(ExactMatrix& m);

int rank(const ExactMatrix& m);

// Basis of the right kernel; size cols - rank.
std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m);

// All solutions of M x = b as (particular, kernel basis); nullopt when
// inconsistent.
struct LinearSolution {
  std::vector<FieldScalar> particular;
  std::vector<std::vector<FieldScalar>> kernel;
};
std::optional<LinearSolution> solve_linear(const ExactMatrix& m,
                                           const std::vector<FieldScalar>& b);

}  // namespace hp
