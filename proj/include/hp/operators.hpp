#pragma once

#include "hp/multipoly.hpp"
#include "hp/scalar.hpp"

namespace hp {

// Differential-difference machinery on sparse polynomials.
//
// The building block is the Dunkl operator
//
//     D_i = d/dx_i + theta * sum_{j != i} (1 - (i,j)) / (x_i - x_j),
//
// where (i,j) swaps the variables x_i and x_j. The quotient is always an
// exact polynomial division and is evaluated through a telescoping closed
// form, term by term, so no rounding or remainder can occur. On top of the
// D_i we build the degree-preserving operators x_i D_i, their power sums
// P_m = sum_i (x_i D_i)^m, and the truncation T_i of x_i D_i that maps each
// monomial rearrangement class to itself.
//
// All functions are pure; indices are 1-based.

// (f - (i,j) f) / (x_i - x_j), exact.
MultiPoly divided_difference(int i, int j, const MultiPoly& f);

// Partial derivative d/dx_i.
MultiPoly partial(int i, const MultiPoly& f);

// Euler operator sum_i x_i d/dx_i (scales each term by its degree).
MultiPoly euler(const MultiPoly& f);

// Delta_i = sum_{j != i} divided_difference(i, j, .), the difference part of
// the Dunkl operator.
MultiPoly apply_delta(int i, const MultiPoly& f);

// D_i f.
MultiPoly apply_dunkl(int i, const MultiPoly& f, const ScalarContext& ctx);

// x_i D_i f.
MultiPoly apply_xD(int i, const MultiPoly& f, const ScalarContext& ctx);

// P_m f = sum_i (x_i D_i)^m f, by m-fold application per index.
MultiPoly apply_P(int m, const MultiPoly& f, const ScalarContext& ctx);

// T_i x^g = (g_i + theta #{j : g_j < g_i}) x^g - theta sum_{j : g_j > g_i} (i,j) x^g,
// extended term by term. Leaves each rearrangement class invariant.
MultiPoly apply_T(int i, const MultiPoly& f, const ScalarContext& ctx);

// (T_1^m + ... + T_N^m) f.
MultiPoly apply_T_sum_power(int m, const MultiPoly& f, const ScalarContext& ctx);

// The conjugated Calogero-Moser-Sutherland operator
//   sum_i (x_i d/dx_i)^2 + theta sum_{i != j} x_i (x_i + x_j)/(x_i - x_j) d/dx_i
// on symmetric input (checked); divisions are paired (i,j)+(j,i) so they are
// exact.
MultiPoly apply_cms(const MultiPoly& f, const ScalarContext& ctx);

// Bilinear pairing <f, g> = (f(D_1, ..., D_N) g)(0). Homogeneous pieces of
// different degrees pair to zero and are skipped.
FieldScalar dunkl_pairing(const MultiPoly& f, const MultiPoly& g, const ScalarContext& ctx);

// Exact division of p by (x_i - x_j); throws if the division has a
// remainder.
MultiPoly exact_divide_by_diff(const MultiPoly& p, int i, int j);

}  // namespace hp
