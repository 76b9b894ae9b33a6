#include "hp/spectra.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hp/fault.hpp"

namespace hp {

FieldScalar h_complete(int m, const std::vector<FieldScalar>& values, const ScalarContext& ctx) {
  if (m < 0) return ctx.zero();
  std::vector<FieldScalar> h(m + 1, ctx.zero());
  h[0] = ctx.one();
  for (const auto& v : values) {
    for (int d = 1; d <= m; ++d) h[d] += v * h[d - 1];
  }
  return h[m];
}

FieldScalar h_subsets(int r, int m, const std::vector<FieldScalar>& values,
                      const ScalarContext& ctx) {
  if (m < 0) return ctx.zero();
  int n = static_cast<int>(values.size());
  if (r < 0 || r > n) return ctx.zero();
  FieldScalar acc = ctx.zero();
  std::vector<FieldScalar> subset;
  std::function<void(int, int)> rec = [&](int next, int need) {
    if (need == 0) {
      acc += h_complete(m, subset, ctx);
      return;
    }
    for (int i = next; i <= n - need; ++i) {
      subset.push_back(values[i]);
      rec(i + 1, need - 1);
      subset.pop_back();
    }
  };
  rec(0, r);
  return acc;
}

namespace {

// The alternating h-function sum over shifted parts; sign +theta gives the
// skew companion.
FieldScalar eig_alternating_hsum(const std::vector<FieldScalar>& ell, int m,
                                 const ScalarContext& ctx, bool skew) {
  int n = static_cast<int>(ell.size());
  FieldScalar sign = skew ? ctx.theta() : -ctx.theta();
  FieldScalar weight = ctx.one();
  FieldScalar acc = ctx.zero();
  for (int k = 1; k <= std::min(m + 1, n); ++k) {
    acc += weight * h_subsets(k, m + 1 - k, ell, ctx);
    weight *= sign;
  }
  if (injected_fault() == Fault::eig_hsum) acc += ctx.one();
  return acc;
}

// 1^T M^m 1 for the upper-triangular matrix with the given diagonal and
// constant off-diagonal entries scaled per column.
FieldScalar triangular_power_route(const std::vector<FieldScalar>& diag,
                                   const std::vector<FieldScalar>& row_weights,
                                   const std::vector<FieldScalar>& off_scale, int m,
                                   const ScalarContext& ctx) {
  int p = static_cast<int>(diag.size());
  ExactMatrix mat(p, p, ctx.mode());
  for (int i = 0; i < p; ++i) {
    mat.at(i, i) = diag[i];
    for (int j = i + 1; j < p; ++j) mat.at(i, j) = off_scale[j];
  }
  ExactMatrix power = mat.pow(m);
  FieldScalar acc = ctx.zero();
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) acc += row_weights[i] * power.at(i, j);
  }
  return acc;
}

}  // namespace

FieldScalar eig_sym_closed(const Partition& lambda, int m, int n, const ScalarContext& ctx) {
  if (m < 1) throw Error("operator power must be at least 1");
  std::vector<FieldScalar> ell = ell_values(lambda, n, ctx);
  FieldScalar via_sum = eig_alternating_hsum(ell, m, ctx, /*skew=*/false);
  std::vector<FieldScalar> weights(n, ctx.one());
  std::vector<FieldScalar> off(n, -ctx.theta());
  FieldScalar via_matrix = triangular_power_route(ell, weights, off, m, ctx);
  if (via_sum != via_matrix) {
    throw Error("eigenvalue routes disagree for lambda = " + lambda.str());
  }
  return via_sum;
}

FieldScalar eig_sym_profile(const Partition& lambda, int m, int n, const ScalarContext& ctx) {
  if (m < 1) throw Error("operator power must be at least 1");
  MultiplicityProfile prof = mult_profile(lambda, n);
  std::vector<FieldScalar> shifted = prof.shifted_values(ctx);
  std::vector<FieldScalar> weights, off;
  weights.reserve(prof.p);
  off.reserve(prof.p);
  for (int i = 0; i < prof.p; ++i) {
    weights.push_back(ctx.integer(prof.multiplicities[i]));
    off.push_back(ctx.integer(-prof.multiplicities[i]) * ctx.theta());
  }
  return triangular_power_route(shifted, weights, off, m, ctx);
}

FieldScalar eig_skew_closed(const Partition& lambda, int m, int n, const ScalarContext& ctx) {
  if (!lambda.has_distinct_parts(n)) {
    throw Error("skew eigenvalue needs distinct parts");
  }
  return eig_alternating_hsum(ell_values(lambda, n, ctx), m, ctx, /*skew=*/true);
}

std::vector<FieldScalar> eig_sym_series(const Partition& lambda, int n, int m_max,
                                        const ScalarContext& ctx) {
  if (!ctx.is_symbolic() && ctx.theta0().is_zero()) {
    throw Error("series extraction requires theta != 0");
  }
  std::vector<FieldScalar> ell = ell_values(lambda, n, ctx);
  FieldScalar theta = ctx.theta();
  int order = m_max + 2;  // coefficients of z^0 .. z^{m_max + 1}
  std::vector<FieldScalar> series(order, ctx.zero());
  series[0] = ctx.one();
  // Multiply by each (1 - (l_i + theta) z).
  for (const auto& l : ell) {
    FieldScalar c = l + theta;
    for (int d = order - 1; d >= 1; --d) series[d] -= c * series[d - 1];
  }
  // Divide by each (1 - l_i z): geometric convolution.
  for (const auto& l : ell) {
    for (int d = 1; d < order; ++d) series[d] += l * series[d - 1];
  }
  if (series[0] != ctx.one()) throw Error("series normalization failed");
  std::vector<FieldScalar> out;
  out.reserve(m_max + 1);
  for (int m = 0; m <= m_max; ++m) {
    out.push_back(-(series[m + 1] / theta));
  }
  return out;
}

FieldScalar trace_isotypic_closed(const Partition& lambda, const Partition& tau, int m, int n,
                                  const ScalarContext& ctx) {
  if (tau.size() != n) throw Error("trace: tau must be a partition of n");
  if (m < 1) throw Error("operator power must be at least 1");
  MultiplicityProfile prof = mult_profile(lambda, n);
  FieldScalar dim_factor = ctx.rational(Rational(dim_irrep(tau, n)));
  FieldScalar theta = ctx.theta();
  if (prof.p == n) {
    // All parts distinct: one-cycle characters against subset h-functions.
    std::vector<FieldScalar> ell = ell_values(lambda, n, ctx);
    FieldScalar acc = ctx.zero();
    FieldScalar weight = ctx.one();
    for (int k = 1; k <= std::min(m + 1, n); ++k) {
      std::vector<int> cls(1, k);
      for (int i = k; i < n; ++i) cls.push_back(1);
      Rational chi = character(tau, Partition(std::move(cls)));
      acc += weight * h_subsets(k, m + 1 - k, ell, ctx) * ctx.rational(chi);
      weight *= -theta;
    }
    return dim_factor * acc;
  }
  // Repeated parts: averaged characters, h-functions over subsets of the
  // shifted block degrees, and a product of the selected block sizes.
  std::vector<FieldScalar> shifted = prof.shifted_values(ctx);
  FieldScalar acc = ctx.zero();
  FieldScalar weight = ctx.one();
  for (int k = 1; k <= std::min(m + 1, prof.p); ++k) {
    FieldScalar level = ctx.zero();
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int next) {
      if (static_cast<int>(subset.size()) == k) {
        std::vector<FieldScalar> vals;
        long count = 1;
        for (int a : subset) {
          vals.push_back(shifted[a - 1]);
          count *= prof.multiplicities[a - 1];
        }
        AveragedCharacterSpec spec{prof.multiplicities, subset};
        Rational chi = averaged_character(tau, spec);
        level += h_complete(m + 1 - k, vals, ctx) * ctx.rational(chi * Rational(count));
        return;
      }
      for (int a = next; a <= prof.p; ++a) {
        subset.push_back(a);
        rec(a + 1);
        subset.pop_back();
      }
    };
    rec(1);
    acc += weight * level;
    weight *= -theta;
  }
  return dim_factor * acc;
}

ExactMatrix t_power_matrix(int i, const Partition& lambda, int m, int n,
                           const ScalarContext& ctx) {
  std::vector<ExponentVector> basis = v_lambda_basis(lambda, n);
  std::map<ExponentVector, int> index;
  for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
  int dim = static_cast<int>(basis.size());
  ExactMatrix mat(dim, dim, ctx.mode());
  for (int j = 0; j < dim; ++j) {
    MultiPoly f = MultiPoly::monomial(basis[j], ctx.one());
    for (int rep = 0; rep < m; ++rep) f = apply_T(i, f, ctx);
    for (const auto& [g, c] : f.terms()) {
      auto it = index.find(g);
      if (it == index.end()) throw Error("T_i left the rearrangement class");
      mat.at(it->second, j) += c;
    }
  }
  return mat;
}

ExactMatrix t_sum_power_matrix(const Partition& lambda, int m, int n, const ScalarContext& ctx) {
  ExactMatrix acc = t_power_matrix(1, lambda, m, n, ctx);
  for (int i = 2; i <= n; ++i) acc = acc + t_power_matrix(i, lambda, m, n, ctx);
  return acc;
}

FieldScalar trace_isotypic_brute(const Partition& lambda, const Partition& tau, int m, int n,
                                 const ScalarContext& ctx, const SpectrumOptions& opts) {
  std::vector<ExponentVector> basis = v_lambda_basis(lambda, n);
  if (ctx.is_symbolic() && static_cast<int>(basis.size()) > opts.symbolic_cap) {
    throw Error("symbolic dimension cap exceeded (" + std::to_string(basis.size()) + " > " +
                std::to_string(opts.symbolic_cap) + "); rerun in specialized mode (--theta p/q)");
  }
  ExactMatrix proj = projector_matrix(tau, lambda, n, ctx);
  FieldScalar via_sum = (proj * t_sum_power_matrix(lambda, m, n, ctx)).trace();
  FieldScalar via_first = ctx.integer(n) * (proj * t_power_matrix(1, lambda, m, n, ctx)).trace();
  if (via_sum != via_first) throw Error("trace forms disagree for lambda = " + lambda.str());
  return via_sum;
}

FieldScalar eig_two_block(int n, int eta, int a, int b, int m, int k,
                          const ScalarContext& ctx) {
  if (a <= b || b < 0) throw Error("two-block shape needs a > b >= 0");
  if (eta < 0 || eta > n) throw Error("eta out of range");
  if (k < 0 || k > std::min(eta, n - eta)) throw Error("k out of range");
  if (m < 1) throw Error("operator power must be at least 1");
  FieldScalar x = ctx.integer(a) + ctx.theta() * ctx.integer(eta);
  FieldScalar y = ctx.integer(b);
  FieldScalar ratio = h_complete(m - 1, {x, y}, ctx);  // (x^m - y^m)/(x - y)
  long coeff = static_cast<long>(eta) * (n - eta) - static_cast<long>(k) * (n - k + 1);
  return x.pow(m) * ctx.integer(n - eta) + y.pow(m) * ctx.integer(eta) -
         ctx.theta() * ratio * ctx.integer(coeff);
}

bool SpectrumReport::all_ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.ok; });
}

SpectrumReport spectrum_on_v_lambda(const Partition& lambda, int m, int n,
                                    const ScalarContext& ctx, const SpectrumOptions& opts) {
  std::vector<ExponentVector> basis = v_lambda_basis(lambda, n);
  int dim = static_cast<int>(basis.size());
  if (ctx.is_symbolic() && dim > opts.symbolic_cap) {
    throw Error("symbolic dimension cap exceeded (" + std::to_string(dim) + " > " +
                std::to_string(opts.symbolic_cap) + "); rerun in specialized mode (--theta p/q)");
  }
  SpectrumReport report;
  report.nvars = n;
  report.lambda = lambda;
  report.m = m;
  report.theta = ctx.theta_str();

  ExactMatrix mat = t_sum_power_matrix(lambda, m, n, ctx);
  Partition mult = mult_partition(lambda, n);
  int covered = 0;
  for (const Partition& tau : partitions_of(n, n)) {
    int iso = isotypic_dimension(lambda, tau, n);
    ExactMatrix proj = projector_matrix(tau, lambda, n, ctx);
    if (iso == 0) {
      report.verdicts.push_back({"zero-block tau=" + tau.str(),
                                 proj.is_zero() && !dominance_leq(mult, tau),
                                 "projector vanishes iff Mult(lambda) is not dominated by tau"});
      continue;
    }
    report.verdicts.push_back(
        {"mult-dominance tau=" + tau.str(), dominance_leq(mult, tau), "Mult(lambda) <= tau"});
    report.verdicts.push_back(
        {"equivariance tau=" + tau.str(), mat * proj == proj * mat, "operator commutes with projector"});
    covered += iso;
    UPoly full = charpoly(mat * proj, opts.symbolic_cap);
    UPoly block = full.shift_down(dim - iso);
    FieldScalar block_trace = -block.coeff(iso - 1);
    FieldScalar closed = trace_isotypic_closed(lambda, tau, m, n, ctx);
    report.verdicts.push_back({"block-trace tau=" + tau.str(), block_trace == closed,
                               "block trace equals the closed trace formula"});
    int mult_total = 0;
    for (const UFactor& f : factor_monic(block)) {
      EigenRecord rec;
      rec.lambda = lambda;
      rec.tau = tau;
      rec.m = m;
      rec.multiplicity = f.multiplicity;
      rec.provenance = Provenance::brute_force;
      rec.residual = f.residual;
      if (f.factor.degree() == 1) {
        rec.value = -f.factor.coeff(0);
      } else {
        rec.minpoly = f.factor;
      }
      mult_total += f.multiplicity * f.factor.degree();
      report.records.push_back(std::move(rec));
    }
    report.verdicts.push_back({"block-dim tau=" + tau.str(), mult_total == iso,
                               "factor degrees sum to the isotypic dimension"});
    report.blocks.push_back(BlockReport{tau, iso, block});
  }
  report.verdicts.push_back(
      {"dimension", covered == dim, "isotypic dimensions sum to dim V_lambda"});
  return report;
}

std::vector<CatalogEntry> n3_catalog(const Partition& lambda, int m, const ScalarContext& ctx) {
  std::vector<int> v = lambda.padded(3);
  if (m < 1) throw Error("operator power must be at least 1");
  FieldScalar theta = ctx.theta();
  std::vector<CatalogEntry> out;
  auto linear = [&](const FieldScalar& value) { return UPoly::linear_root(value); };
  if (v[0] == v[1] && v[1] == v[2]) {
    // One monomial; the operator multiplies it by a each time.
    FieldScalar value = ctx.integer(3) * ctx.integer(v[0]).pow(m);
    out.push_back({"(a,a,a)", "symmetric", linear(value), 1, "x1^a*x2^a*x3^a"});
    return out;
  }
  if (v[0] == v[1] || v[1] == v[2]) {
    bool high_pair = v[0] == v[1];  // (a,a,b) vs (a,b,b)
    int a = v[0];
    int b = v[2];
    FieldScalar x = high_pair ? ctx.integer(a) + theta : ctx.integer(a) + theta + theta;
    FieldScalar y = ctx.integer(b);
    FieldScalar ratio = h_complete(m - 1, {x, y}, ctx);
    FieldScalar base = high_pair ? ctx.integer(2) * x.pow(m) + y.pow(m)
                                 : x.pow(m) + ctx.integer(2) * y.pow(m);
    std::string shape = high_pair ? "(a,a,b)" : "(a,b,b)";
    out.push_back({shape, "symmetric", linear(base - ctx.integer(2) * theta * ratio), 1,
                   "sum of the three rearrangements"});
    out.push_back({shape, "paired", linear(base + theta * ratio), 2,
                   "differences of rearrangements"});
    return out;
  }
  // Distinct parts: shifted values (a + 2 theta, b + theta, c).
  std::vector<FieldScalar> ell = ell_values(lambda, 3, ctx);
  out.push_back({"(a,b,c)", "symmetric",
                 linear(eig_alternating_hsum(ell, m, ctx, /*skew=*/false)), 1,
                 "sum of all six rearrangements"});
  // The paired eigenvalues are the roots of t^2 - S t + P; only their sum and
  // product are formed, no radicals.
  FieldScalar sum_pm = ctx.zero();
  FieldScalar sum_sq = ctx.zero();
  FieldScalar e2 = ctx.zero();
  for (size_t i = 0; i < ell.size(); ++i) {
    sum_pm += ell[i].pow(m);
    sum_sq += ell[i] * ell[i];
    for (size_t j = i + 1; j < ell.size(); ++j) e2 += ell[i] * ell[j];
  }
  FieldScalar h = h_complete(m - 2, ell, ctx);
  FieldScalar half = ctx.rational(Rational(1, 2));
  FieldScalar quarter = ctx.rational(Rational(1, 4));
  FieldScalar disc = ctx.integer(4) * sum_sq - ctx.integer(4) * e2 - ctx.integer(3) * theta * theta;
  FieldScalar s = ctx.integer(2) * sum_pm - theta * theta * h;
  FieldScalar mid = sum_pm - half * theta * theta * h;
  FieldScalar p = mid * mid - quarter * theta * theta * h * h * disc;
  out.push_back({"(a,b,c)", "paired", UPoly::quadratic(-s, p), 2,
                 "differences of rearrangements (two pairs)"});
  out.push_back({"(a,b,c)", "skew", linear(eig_alternating_hsum(ell, m, ctx, /*skew=*/true)), 1,
                 "alternating sum of all six rearrangements"});
  return out;
}

namespace {

// Dominance-compatible total order: descending lexicographic on prefix-sum
// vectors, so every partition comes before anything it strictly dominates.
std::vector<Partition> dominance_sorted_desc(std::vector<Partition> parts, int n) {
  auto key = [n](const Partition& p) {
    std::vector<int> pref(n, 0);
    int acc = 0;
    for (int i = 0; i < n; ++i) {
      acc += p.part(i);
      pref[i] = acc;
    }
    return pref;
  };
  std::sort(parts.begin(), parts.end(), [&](const Partition& a, const Partition& b) {
    return key(a) > key(b);
  });
  return parts;
}

}  // namespace

JackResult jack_polynomial(const Partition& lambda, int n, const ScalarContext& ctx) {
  std::vector<Partition> doms = dominance_sorted_desc(enumerate_dominated(lambda, n), n);
  int count = static_cast<int>(doms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < count; ++i) index[doms[i].parts()] = i;

  // Matrix of the second power-sum operator on the monomial symmetric basis
  // of the dominated classes; dominance-triangular with the closed
  // eigenvalues on the diagonal.
  ExactMatrix op(count, count, ctx.mode());
  for (int j = 0; j < count; ++j) {
    MultiPoly image = apply_P(2, monomial_symmetric(doms[j], n, ctx), ctx);
    for (const auto& [mu, c] : to_msym_basis(image)) {
      auto it = index.find(mu.parts());
      if (it == index.end()) throw Error("operator image left the dominated span");
      op.at(it->second, j) = c;
    }
  }
  FieldScalar target = op.at(0, 0);
  std::vector<FieldScalar> coeff(count, ctx.zero());
  coeff[0] = ctx.one();
  for (int i = 1; i < count; ++i) {
    FieldScalar rhs = ctx.zero();
    for (int j = 0; j < i; ++j) rhs += op.at(i, j) * coeff[j];
    FieldScalar denom = target - op.at(i, i);
    if (denom.is_zero()) {
      throw Error("triangular solve degenerate: eigenvalues of " + lambda.str() + " and " +
                  doms[i].str() + " collide at theta = " + ctx.theta_str());
    }
    coeff[i] = rhs / denom;
  }
  JackResult result{MultiPoly(n, ctx.mode()), {}};
  for (int i = 0; i < count; ++i) {
    if (coeff[i].is_zero() && i > 0) continue;
    result.poly += monomial_symmetric(doms[i], n, ctx).scaled(coeff[i]);
    result.msym_coeffs.emplace_back(doms[i], coeff[i]);
  }
  return result;
}

namespace {

// Matrix whose columns are the given vectors.
ExactMatrix from_columns(const std::vector<std::vector<FieldScalar>>& cols, int rows,
                         ThetaMode mode) {
  ExactMatrix m(rows, static_cast<int>(cols.size()), mode);
  for (size_t j = 0; j < cols.size(); ++j) {
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

std::vector<FieldScalar> matvec(const ExactMatrix& m, const std::vector<FieldScalar>& v) {
  std::vector<FieldScalar> out(m.rows(), FieldScalar::rational(Rational(0), m.mode()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += m.at(i, j) * v[j];
    }
  }
  return out;
}

// Basis of the column space: the nonzero rows of rref(M^T).
std::vector<std::vector<FieldScalar>> column_space_basis(const ExactMatrix& m) {
  ExactMatrix t = m.transpose();
  std::vector<int> pivots = rref(t);
  std::vector<std::vector<FieldScalar>> out;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<FieldScalar> row(t.cols(), FieldScalar::rational(Rational(0), m.mode()));
    for (int c = 0; c < t.cols(); ++c) row[c] = t.at(static_cast<int>(r), c);
    out.push_back(std::move(row));
  }
  return out;
}

// The matrix R of an operator A restricted to the invariant subspace spanned
// by the columns of B: solves A B = B R column by column.
ExactMatrix restrict_operator(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix r(b.cols(), b.cols(), a.mode());
  for (int j = 0; j < b.cols(); ++j) {
    std::vector<FieldScalar> target(a.rows(), FieldScalar::rational(Rational(0), a.mode()));
    for (int i = 0; i < a.rows(); ++i) {
      for (int k = 0; k < b.rows(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        target[i] += a.at(i, k) * b.at(k, j);
      }
    }
    auto sol = solve_linear(b, target);
    if (!sol) throw Error("subspace is not invariant");
    for (int i = 0; i < b.cols(); ++i) r.at(i, j) = sol->particular[i];
  }
  return r;
}

// Evaluate a polynomial at a matrix argument.
ExactMatrix eval_poly_at(const UPoly& p, const ExactMatrix& m) {
  ExactMatrix acc(m.rows(), m.cols(), m.mode());
  ExactMatrix power = ExactMatrix::identity(m.rows(), m.mode());
  for (int d = 0; d <= p.degree(); ++d) {
    if (!p.coeff(d).is_zero()) acc = acc + power.scaled(p.coeff(d));
    if (d < p.degree()) power = power * m;
  }
  return acc;
}

struct Block {
  ExactMatrix basis;  // columns span the subspace inside V_mu
  std::vector<EigenEntry> entries;
  Block(ExactMatrix b) : basis(std::move(b)) {}
};

}  // namespace

std::vector<EigenFunction> joint_eigenbasis(const Partition& lambda, int n,
                                            const std::vector<int>& m_list,
                                            const ScalarContext& ctx,
                                            const SpectrumOptions& opts) {
  if (m_list.empty()) throw Error("m_list must be nonempty");
  std::vector<EigenFunction> out;
  int group_counter = 0;
  std::vector<Partition> doms = dominance_sorted_desc(enumerate_dominated(lambda, n), n);
  for (const Partition& mu : doms) {
    std::vector<ExponentVector> basis = v_lambda_basis(mu, n);
    int dim = static_cast<int>(basis.size());
    if (ctx.is_symbolic() && dim > opts.symbolic_cap) {
      throw Error("symbolic dimension cap exceeded; rerun in specialized mode (--theta p/q)");
    }
    // Strictly dominated monomials: the space the triangular extension lives in.
    std::vector<ExponentVector> lower;
    for (const Partition& nu : dominance_sorted_desc(enumerate_dominated(mu, n), n)) {
      if (nu == mu) continue;
      for (const auto& g : v_lambda_basis(nu, n)) lower.push_back(g);
    }
    std::map<ExponentVector, int> mu_index, low_index;
    for (int i = 0; i < dim; ++i) mu_index[basis[i]] = i;
    for (size_t i = 0; i < lower.size(); ++i) low_index[lower[i]] = static_cast<int>(i);
    int lodim = static_cast<int>(lower.size());

    std::vector<ExactMatrix> t_mats;
    for (int m : m_list) t_mats.push_back(t_sum_power_matrix(mu, m, n, ctx));

    // Split into isotypic components first, then refine by each operator's
    // primary decomposition.
    std::vector<std::pair<std::optional<Partition>, Block>> blocks;
    for (const Partition& tau : partitions_of(n, n)) {
      if (isotypic_dimension(mu, tau, n) == 0) continue;
      ExactMatrix proj = projector_matrix(tau, mu, n, ctx);
      auto cols = column_space_basis(proj);
      blocks.emplace_back(tau, Block(from_columns(cols, dim, ctx.mode())));
    }
    for (size_t mi = 0; mi < m_list.size(); ++mi) {
      std::vector<std::pair<std::optional<Partition>, Block>> next;
      for (auto& [tau, block] : blocks) {
        ExactMatrix restricted = restrict_operator(t_mats[mi], block.basis);
        UPoly cp = charpoly(restricted, opts.symbolic_cap);
        std::vector<UFactor> factors = factor_monic(cp);
        for (const UFactor& f : factors) {
          ExactMatrix powered = eval_poly_at(f.factor, restricted).pow(f.multiplicity);
          auto kernel = kernel_basis(powered);
          if (static_cast<int>(kernel.size()) != f.multiplicity * f.factor.degree()) {
            throw Error("primary component dimension mismatch");
          }
          std::vector<std::vector<FieldScalar>> cols;
          for (const auto& k : kernel) cols.push_back(matvec(block.basis, k));
          Block sub(from_columns(cols, dim, ctx.mode()));
          sub.entries = block.entries;
          EigenEntry entry;
          entry.m = m_list[mi];
          if (f.factor.degree() == 1) {
            entry.value = -f.factor.coeff(0);
            // The component of a commuting family member must act as the
            // scalar itself, not just nilpotently.
            ExactMatrix sub_restricted = restrict_operator(t_mats[mi], sub.basis);
            ExactMatrix shift = sub_restricted -
                ExactMatrix::identity(sub_restricted.rows(), ctx.mode()).scaled(*entry.value);
            if (!shift.is_zero()) throw Error("operator not semisimple on component");
          } else {
            entry.minpoly = f.factor;
          }
          sub.entries.push_back(std::move(entry));
          next.emplace_back(tau, std::move(sub));
        }
      }
      blocks = std::move(next);
    }

    // Operator matrices on the lower space, for the extension solve.
    std::vector<ExactMatrix> low_ops;
    for (size_t mi = 0; mi < m_list.size(); ++mi) {
      ExactMatrix lop(lodim, lodim, ctx.mode());
      for (int j = 0; j < lodim; ++j) {
        MultiPoly image = apply_P(m_list[mi], MultiPoly::monomial(lower[j], ctx.one()), ctx);
        for (const auto& [g, c] : image.terms()) {
          auto it = low_index.find(g);
          if (it == low_index.end()) throw Error("operator image left the dominated span");
          lop.at(it->second, j) += c;
        }
      }
      low_ops.push_back(std::move(lop));
    }

    for (auto& [tau, block] : blocks) {
      int b = block.basis.cols();
      // Leading parts as polynomials.
      std::vector<MultiPoly> leading(b, MultiPoly(n, ctx.mode()));
      for (int j = 0; j < b; ++j) {
        for (int i = 0; i < dim; ++i) {
          leading[j].add_term(basis[i], block.basis.at(i, j));
        }
      }
      std::vector<MultiPoly> extensions(b, MultiPoly(n, ctx.mode()));
      if (lodim > 0) {
        // Unknowns w_1..w_b in the lower space, solving for every requested m:
        //   P_m (v_i + w_i) = sum_j R_m[j][i] (v_j + w_j).
        std::vector<ExactMatrix> restricted;
        for (size_t mi = 0; mi < m_list.size(); ++mi) {
          restricted.push_back(restrict_operator(t_mats[mi], block.basis));
        }
        int unknowns = b * lodim;
        int rows = static_cast<int>(m_list.size()) * b * lodim;
        ExactMatrix system(rows, unknowns, ctx.mode());
        std::vector<FieldScalar> rhs(rows, ctx.zero());
        int row0 = 0;
        for (size_t mi = 0; mi < m_list.size(); ++mi) {
          for (int i = 0; i < b; ++i) {
            // Known part: the lower component of P_m v_i.
            MultiPoly pv = apply_P(m_list[mi], leading[i], ctx);
            for (const auto& [g, c] : pv.terms()) {
              auto it = low_index.find(g);
              if (it == low_index.end()) {
                if (mu_index.find(g) == mu_index.end()) {
                  throw Error("operator image left the dominated span");
                }
                continue;  // the V_mu part cancels against R by construction
              }
              rhs[row0 + it->second] -= c;
            }
            // Unknown part: P_m w_i - sum_j R[j][i] w_j.
            for (int l = 0; l < lodim; ++l) {
              for (int l2 = 0; l2 < lodim; ++l2) {
                if (low_ops[mi].at(l2, l).is_zero()) continue;
                system.at(row0 + l2, i * lodim + l) += low_ops[mi].at(l2, l);
              }
            }
            for (int j = 0; j < b; ++j) {
              const FieldScalar& rji = restricted[mi].at(j, i);
              if (rji.is_zero()) continue;
              for (int l = 0; l < lodim; ++l) {
                system.at(row0 + l, j * lodim + l) -= rji;
              }
            }
            row0 += lodim;
          }
        }
        auto sol = solve_linear(system, rhs);
        if (!sol || !sol->kernel.empty()) {
          // A strictly dominated class shares the eigenvalue tuple, so the
          // triangular extension is either not unique (free directions) or
          // does not exist at all (a Jordan block at this theta).
          std::string tuple;
          for (const auto& e : block.entries) {
            if (!tuple.empty()) tuple += ", ";
            tuple += "m=" + std::to_string(e.m) + ": " +
                     (e.value ? e.value->str() : e.minpoly->str());
          }
          throw Error("eigenvalue collision below " + mu.str() + " (tuple " + tuple +
                      ") breaks the triangular extension at theta = " + ctx.theta_str() +
                      "; perturb theta");
        }
        for (int i = 0; i < b; ++i) {
          for (int l = 0; l < lodim; ++l) {
            extensions[i].add_term(lower[l], sol->particular[i * lodim + l]);
          }
        }
      }
      for (int i = 0; i < b; ++i) {
        EigenFunction fn{leading[i] + extensions[i], mu, tau, block.entries, group_counter};
        out.push_back(std::move(fn));
      }
      ++group_counter;
    }
  }
  return out;
}

}  // namespace hp
