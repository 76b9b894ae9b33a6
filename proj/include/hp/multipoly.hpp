#pragma once

#include <map>
#include <string>
#include <vector>

#include "hp/partition.hpp"
#include "hp/permutation.hpp"
#include "hp/scalar.hpp"

namespace hp {

using ExponentVector = std::vector<int>;

// Graded lexicographic order, highest first: larger total degree wins, ties
// broken lexicographically. Keeps term iteration (and hence all printed and
// serialized output) deterministic.
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

int total_degree(const ExponentVector& g);

// Sparse polynomial in a fixed number of variables over the coefficient
// field. Zero coefficients are never stored; all coefficients share the
// ambient mode.
class MultiPoly {
 public:
  MultiPoly(int nvars, ThetaMode mode) : nvars_(nvars), mode_(mode) {}

  static MultiPoly zero(int nvars, const ScalarContext& ctx) {
    return MultiPoly(nvars, ctx.mode());
  }
  static MultiPoly constant(int nvars, const FieldScalar& c);
  static MultiPoly monomial(ExponentVector g, const FieldScalar& c);

  int nvars() const { return nvars_; }
  ThetaMode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ExponentVector, FieldScalar, GrlexGreater>& terms() const { return terms_; }

  FieldScalar coeff(const ExponentVector& g) const;
  void add_term(const ExponentVector& g, const FieldScalar& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const FieldScalar& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);

  // Multiplication by the monomial x^g (exponent shift).
  MultiPoly shifted(const ExponentVector& g) const;
  // Multiplication by the single variable x_i (1-based).
  MultiPoly times_var(int i) const;

  int degree() const;  // max total degree, -1 for zero
  bool is_homogeneous() const;
  // Terms of the given total degree only.
  MultiPoly homogeneous_part(int deg) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int nvars_;
  ThetaMode mode_;
  std::map<ExponentVector, FieldScalar, GrlexGreater> terms_;
};

// Variable renaming x_i -> x_{sigma(i)}; a group action on polynomials with
// the apply-rightmost-first composition convention.
MultiPoly permute_action(const Permutation& sigma, const MultiPoly& f);

// The distinct rearrangements of lambda padded to n entries, listed in
// graded-lex order (highest first). Their span is the permutation module
// attached to lambda.
std::vector<ExponentVector> v_lambda_basis(const Partition& lambda, int n);

// Monomial symmetric polynomial: the sum of the basis monomials above with
// unit coefficients.
MultiPoly monomial_symmetric(const Partition& lambda, int n, const ScalarContext& ctx);

// True iff f is invariant under every adjacent transposition (which generate
// the full symmetric group).
bool is_symmetric(const MultiPoly& f);

// Expansion of a symmetric polynomial in the monomial symmetric basis:
// pairs (lambda, coefficient). Throws if f is not symmetric.
std::vector<std::pair<Partition, FieldScalar>> to_msym_basis(const MultiPoly& f);

}  // namespace hp
