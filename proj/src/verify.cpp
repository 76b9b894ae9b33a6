#include "hp/verify.hpp"

#include <algorithm>
#include <functional>

#include "hp/operators.hpp"

namespace hp {

namespace {

std::vector<ExponentVector> monomials_up_to(int nvars, int maxdeg) {
  std::vector<ExponentVector> out;
  ExponentVector cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[var] = e;
      rec(var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(0, maxdeg);
  return out;
}

MultiPoly monomial_of(const ExponentVector& g, const ScalarContext& ctx) {
  return MultiPoly::monomial(g, ctx.one());
}

std::string gamma_str(const ExponentVector& g) {
  std::string s = "(";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<std::string> verify_commutativity(const VerifyOptions& opts) {
  std::vector<std::string> violations;
  const ScalarContext& ctx = opts.ctx;
  int n = opts.n;
  auto monos = monomials_up_to(n, opts.maxdeg);
  for (const auto& g : monos) {
    MultiPoly f = monomial_of(g, ctx);
    // Power sums commute pairwise.
    for (int m = 1; m <= 3; ++m) {
      for (int k = m + 1; k <= 3; ++k) {
        MultiPoly mk = apply_P(m, apply_P(k, f, ctx), ctx);
        MultiPoly km = apply_P(k, apply_P(m, f, ctx), ctx);
        if (mk != km) {
          violations.push_back("[P_" + std::to_string(m) + ", P_" + std::to_string(k) +
                               "] != 0 on x^" + gamma_str(g));
        }
      }
    }
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        // Dunkl operators commute.
        if (apply_dunkl(a, apply_dunkl(b, f, ctx), ctx) !=
            apply_dunkl(b, apply_dunkl(a, f, ctx), ctx)) {
          violations.push_back("[D_" + std::to_string(a) + ", D_" + std::to_string(b) +
                               "] != 0 on x^" + gamma_str(g));
        }
        // Difference parts commute.
        if (apply_delta(a, apply_delta(b, f)) != apply_delta(b, apply_delta(a, f))) {
          violations.push_back("[Delta_" + std::to_string(a) + ", Delta_" + std::to_string(b) +
                               "] != 0 on x^" + gamma_str(g));
        }
        // [x_a, Delta_b] = (a,b).
        MultiPoly lhs = apply_delta(b, f).times_var(a) - apply_delta(b, f.times_var(a));
        MultiPoly rhs = permute_action(Permutation::transposition(n, a, b), f);
        if (lhs != rhs) {
          violations.push_back("[x_" + std::to_string(a) + ", Delta_" + std::to_string(b) +
                               "] != (a,b) on x^" + gamma_str(g));
        }
        // Mixed commutator, in the order derived by direct expansion:
        // [x_a D_a, x_b D_b] = theta (a,b) (x_a D_a - x_b D_b).
        MultiPoly ab = apply_xD(a, apply_xD(b, f, ctx), ctx);
        MultiPoly ba = apply_xD(b, apply_xD(a, f, ctx), ctx);
        MultiPoly diff = apply_xD(a, f, ctx) - apply_xD(b, f, ctx);
        MultiPoly expected =
            permute_action(Permutation::transposition(n, a, b), diff).scaled(ctx.theta());
        if (ab - ba != expected) {
          violations.push_back("[x_aD_a, x_bD_b] != theta (a,b)(x_aD_a - x_bD_b) on x^" +
                               gamma_str(g) + " (a=" + std::to_string(a) +
                               ", b=" + std::to_string(b) + ")");
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_triangularity(const VerifyOptions& opts) {
  std::vector<std::string> violations;
  const ScalarContext& ctx = opts.ctx;
  for (const auto& g : monomials_up_to(opts.n, opts.maxdeg)) {
    MultiPoly f = monomial_of(g, ctx);
    Partition shape = sort_to_partition(g);
    for (int m = 1; m <= 3; ++m) {
      MultiPoly rem = apply_P(m, f, ctx) - apply_T_sum_power(m, f, ctx);
      for (const auto& [h, c] : rem.terms()) {
        Partition hs = sort_to_partition(h);
        if (!(dominance_leq(hs, shape) && hs != shape)) {
          violations.push_back("P_" + std::to_string(m) + " x^" + gamma_str(g) +
                               " remainder contains non-dominated monomial x^" + gamma_str(h));
          break;
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_selfadjoint(const VerifyOptions& opts) {
  std::vector<std::string> violations;
  const ScalarContext& ctx = opts.ctx;
  int maxdeg = std::min(opts.maxdeg, 4);
  auto monos = monomials_up_to(opts.n, maxdeg);
  for (const auto& g1 : monos) {
    for (const auto& g2 : monos) {
      if (total_degree(g1) != total_degree(g2) || total_degree(g1) == 0) continue;
      MultiPoly f = monomial_of(g1, ctx);
      MultiPoly h = monomial_of(g2, ctx);
      for (int i = 1; i <= opts.n; ++i) {
        FieldScalar left = dunkl_pairing(apply_xD(i, f, ctx), h, ctx);
        FieldScalar right = dunkl_pairing(f, apply_xD(i, h, ctx), ctx);
        if (left != right) {
          violations.push_back("<x_iD_i f, g> != <f, x_iD_i g> for f=x^" + gamma_str(g1) +
                               ", g=x^" + gamma_str(g2) + ", i=" + std::to_string(i));
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_cms(const VerifyOptions& opts) {
  std::vector<std::string> violations;
  const ScalarContext& ctx = opts.ctx;
  for (int total = 0; total <= opts.maxdeg; ++total) {
    for (const Partition& lambda : partitions_of(total, opts.n)) {
      MultiPoly msym = monomial_symmetric(lambda, opts.n, ctx);
      if (apply_P(2, msym, ctx) != apply_cms(msym, ctx)) {
        violations.push_back("P_2 != CMS operator on m_" + lambda.str());
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_traces(const VerifyOptions& opts) {
  std::vector<std::string> violations;
  const ScalarContext& ctx = opts.ctx;
  SpectrumOptions sopts{opts.symbolic_cap};
  for (int total = 1; total <= opts.maxdeg; ++total) {
    for (const Partition& lambda : partitions_of(total, opts.n)) {
      for (const Partition& tau : partitions_of(opts.n, opts.n)) {
        for (int m = 1; m <= 3; ++m) {
          FieldScalar closed = trace_isotypic_closed(lambda, tau, m, opts.n, ctx);
          FieldScalar brute = trace_isotypic_brute(lambda, tau, m, opts.n, ctx, sopts);
          if (closed != brute) {
            violations.push_back("trace formula mismatch: lambda=" + lambda.str() +
                                 " tau=" + tau.str() + " m=" + std::to_string(m) + " (closed " +
                                 closed.str() + ", brute " + brute.str() + ")");
          }
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_catalog(const VerifyOptions& opts) {
  std::vector<std::string> violations;
  if (opts.n != 3) {
    violations.push_back("catalog suite requires --n 3");
    return violations;
  }
  const ScalarContext& ctx = opts.ctx;
  SpectrumOptions sopts{opts.symbolic_cap};
  std::vector<Partition> shapes;
  for (int a = 0; a <= opts.maxdeg; ++a) {
    shapes.push_back(Partition({a, a, a}));
    for (int b = 0; b < a; ++b) {
      shapes.push_back(Partition({a, a, b}));
      shapes.push_back(Partition({a, b, b}));
      for (int c = 0; c < b; ++c) shapes.push_back(Partition({a, b, c}));
    }
  }
  for (const Partition& lambda : shapes) {
    for (int m = 1; m <= 4; ++m) {
      // The catalog factors, with multiplicity, must assemble exactly into
      // the characteristic polynomial of the truncated operator sum.
      UPoly assembled = UPoly::constant(ctx.one());
      for (const CatalogEntry& entry : n3_catalog(lambda, m, ctx)) {
        assembled = assembled * entry.factor.pow(entry.multiplicity);
      }
      ExactMatrix mat = t_sum_power_matrix(lambda, m, 3, ctx);
      UPoly actual = charpoly(mat, sopts.symbolic_cap);
      if (assembled != actual) {
        violations.push_back("catalog does not match spectrum for lambda=" + lambda.str() +
                             " m=" + std::to_string(m));
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_suite_names() {
  return {"commutativity", "triangularity", "selfadjoint", "cms", "traces", "catalog"};
}

std::vector<std::string> run_verify_suite(const std::string& name, const VerifyOptions& opts) {
  auto guarded = [&](const std::function<std::vector<std::string>(const VerifyOptions&)>& suite,
                     const std::string& label) {
    try {
      return suite(opts);
    } catch (const std::exception& e) {
      return std::vector<std::string>{label + ": internal check failed: " + e.what()};
    }
  };
  if (name == "commutativity") return guarded(verify_commutativity, name);
  if (name == "triangularity") return guarded(verify_triangularity, name);
  if (name == "selfadjoint") return guarded(verify_selfadjoint, name);
  if (name == "cms") return guarded(verify_cms, name);
  if (name == "traces") return guarded(verify_traces, name);
  if (name == "catalog") return guarded(verify_catalog, name);
  if (name == "all") {
    std::vector<std::string> all;
    for (const std::string& suite : verify_suite_names()) {
      auto v = run_verify_suite(suite, opts);
      for (auto& s : v) all.push_back(suite + ": " + s);
    }
    return all;
  }
  throw Error("unknown verify suite: " + name);
}

}  // namespace hp
