#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hp/characters.hpp"
#include "hp/matrix.hpp"
#include "hp/multipoly.hpp"
#include "hp/operators.hpp"
#include "hp/partition.hpp"
#include "hp/upoly.hpp"

namespace hp {

struct SpectrumOptions {
  int symbolic_cap = kDefaultSymbolicCap;
};

// Complete homogeneous function h_m of the given values; h_m = 0 for m < 0.
FieldScalar h_complete(int m, const std::vector<FieldScalar>& values, const ScalarContext& ctx);

// Sum of h_m over all r-element subsets of the values.
FieldScalar h_subsets(int r, int m, const std::vector<FieldScalar>& values,
                      const ScalarContext& ctx);

// Eigenvalue of the m-th power-sum operator on the symmetric eigenfunction
// attached to lambda. Computed both as the alternating h-function sum over
// the shifted parts l_i = lambda_i + theta (n - i) and as the power of the
// upper-triangular matrix with diagonal l and off-diagonal -theta; the two
// routes are asserted equal.
FieldScalar eig_sym_closed(const Partition& lambda, int m, int n, const ScalarContext& ctx);

// The same eigenvalue through the block-profile matrix (one row per distinct
// part, off-diagonals weighted by block sizes).
FieldScalar eig_sym_profile(const Partition& lambda, int m, int n, const ScalarContext& ctx);

// Skew-symmetric companion for distinct-part lambda: the alternating sum
// with +theta in place of -theta.
FieldScalar eig_skew_closed(const Partition& lambda, int m, int n, const ScalarContext& ctx);

// eig_0 .. eig_mmax from the generating function
//   1 - theta z sum_m eig_m z^m = prod_i (1 - (l_i + theta) z)/(1 - l_i z),
// extracted by exact power-series arithmetic. eig_0 = n by convention.
// Requires theta != 0 in specialized mode.
std::vector<FieldScalar> eig_sym_series(const Partition& lambda, int n, int m_max,
                                        const ScalarContext& ctx);

// Sum of the eigenvalues in the tau-isotypic component: the closed trace
// formula. Distinct-part lambda uses the one-cycle character sum; repeated
// parts use averaged characters with per-subset h-functions.
FieldScalar trace_isotypic_closed(const Partition& lambda, const Partition& tau, int m, int n,
                                  const ScalarContext& ctx);

// The same trace from explicit matrices: Trace[pi_tau sum_i T_i^m] on the
// monomial basis. Both the full sum and the n * T_1^m forms are computed and
// asserted equal.
FieldScalar trace_isotypic_brute(const Partition& lambda, const Partition& tau, int m, int n,
                                 const ScalarContext& ctx, const SpectrumOptions& opts = {});

// Closed-form eigenvalue for the two-block shape (a^{n-eta}, b^eta) on the
// (n-k, k) isotype.
FieldScalar eig_two_block(int n, int eta, int a, int b, int m, int k, const ScalarContext& ctx);

// Matrix of T_i^m (resp. sum_i T_i^m) on the monomial basis of the
// rearrangement class of lambda.
ExactMatrix t_power_matrix(int i, const Partition& lambda, int m, int n,
                           const ScalarContext& ctx);
ExactMatrix t_sum_power_matrix(const Partition& lambda, int m, int n, const ScalarContext& ctx);

enum class Provenance { closed_form, brute_force };

struct EigenRecord {
  Partition lambda;
  std::optional<Partition> tau;        // nullopt = unresolved isotype
  int m = 1;
  std::optional<FieldScalar> value;    // linear factor
  std::optional<UPoly> minpoly;        // non-linear factor, monic
  int multiplicity = 1;
  Provenance provenance = Provenance::brute_force;
  bool residual = false;               // factor resisted exact factoring
};

struct BlockReport {
  Partition tau;
  int isotypic_dim = 0;
  UPoly block_charpoly;
};

struct Verdict {
  std::string check;
  bool ok = false;
  std::string detail;
};

struct SpectrumReport {
  int nvars = 0;
  Partition lambda;
  int m = 1;
  std::string theta;
  std::vector<EigenRecord> records;
  std::vector<BlockReport> blocks;
  std::vector<Verdict> verdicts;
  bool all_ok() const;
};

// Spectrum of sum_i T_i^m on the rearrangement class of lambda, split into
// isotypic blocks by the central projectors. Specialized mode factors each
// block exactly (rational roots, quadratic factors, flagged residuals);
// symbolic mode reports whole block characteristic polynomials. Verdicts
// record the trace and dimension cross-checks.
SpectrumReport spectrum_on_v_lambda(const Partition& lambda, int m, int n,
                                    const ScalarContext& ctx, const SpectrumOptions& opts = {});

struct CatalogEntry {
  std::string shape;    // "(a,a,a)", "(a,a,b)", "(a,b,b)", "(a,b,c)"
  std::string isotype;  // "symmetric", "paired", "skew"
  UPoly factor;         // monic linear or quadratic factor of the spectrum
  int multiplicity = 1;
  std::string leading;  // description of the leading monomials
};

// The full three-variable eigenvalue catalog for the shape class of lambda.
// The paired entry of the distinct-parts shape is emitted as a monic
// quadratic (sum and product of the eigenvalue pair), squared in the
// spectrum; no radicals are constructed.
std::vector<CatalogEntry> n3_catalog(const Partition& lambda, int m, const ScalarContext& ctx);

struct JackResult {
  MultiPoly poly;  // monic in the leading monomial symmetric function
  std::vector<std::pair<Partition, FieldScalar>> msym_coeffs;
};

// The symmetric eigenfunction attached to lambda: the unique monic
// dominance-triangular combination of monomial symmetric functions that the
// second power-sum operator fixes up to scale. At special rational theta the
// triangular solve can degenerate; the error names the offending theta.
JackResult jack_polynomial(const Partition& lambda, int n, const ScalarContext& ctx);

struct EigenEntry {
  int m = 1;
  std::optional<FieldScalar> value;
  std::optional<UPoly> minpoly;  // minimal polynomial when not scalar
};

struct EigenFunction {
  MultiPoly poly;
  Partition mu;                  // leading rearrangement class
  std::optional<Partition> tau;  // isotype of the leading part, when unique
  std::vector<EigenEntry> eigenvalues;
  int group = -1;  // functions in one undivided block share a group id
};

// A basis of the union of the rearrangement classes dominated by lambda,
// organized into joint eigenspaces of the requested operator powers. Blocks
// whose minimal polynomials do not split over the field are kept whole and
// carry the factor instead of a scalar. Eigenvalue collisions between a
// class and a strictly dominated one make the triangular extension
// non-unique and raise an error suggesting a different theta.
std::vector<EigenFunction> joint_eigenbasis(const Partition& lambda, int n,
                                            const std::vector<int>& m_list,
                                            const ScalarContext& ctx,
                                            const SpectrumOptions& opts = {});

}  // namespace hp
