#include "hp/operators.hpp"

#include <cstdlib>
#include <cstring>

#include "hp/fault.hpp"

namespace hp {

Fault injected_fault() {
  static const Fault f = [] {
    const char* v = std::getenv("HP_FAULT_INJECT");
    if (v == nullptr || *v == '\0') return Fault::none;
    if (std::strcmp(v, "eig-hsum") == 0) return Fault::eig_hsum;
    if (std::strcmp(v, "t-diag") == 0) return Fault::t_diag;
    if (std::strcmp(v, "avgchar-norm") == 0) return Fault::avgchar_norm;
    throw Error(std::string("unknown HP_FAULT_INJECT value: ") + v);
  }();
  return f;
}

MultiPoly divided_difference(int i, int j, const MultiPoly& f) {
  if (i == j) throw Error("divided difference needs distinct indices");
  if (i < 1 || j < 1 || i > f.nvars() || j > f.nvars()) throw Error("index out of range");
  int a = i - 1, b = j - 1;
  MultiPoly out(f.nvars(), f.mode());
  for (const auto& [g, c] : f.terms()) {
    int u = g[a], v = g[b];
    if (u == v) continue;
    // (x_i^u x_j^v - x_i^v x_j^u) / (x_i - x_j) telescopes into a sum of
    // |u - v| monomials between the two exponent pairs.
    ExponentVector t = g;
    if (u > v) {
      for (int k = 0; k < u - v; ++k) {
        t[a] = u - 1 - k;
        t[b] = v + k;
        out.add_term(t, c);
      }
    } else {
      for (int k = 0; k < v - u; ++k) {
        t[a] = v - 1 - k;
        t[b] = u + k;
        out.add_term(t, -c);
      }
    }
  }
  return out;
}

MultiPoly partial(int i, const MultiPoly& f) {
  if (i < 1 || i > f.nvars()) throw Error("index out of range");
  int a = i - 1;
  MultiPoly out(f.nvars(), f.mode());
  for (const auto& [g, c] : f.terms()) {
    if (g[a] == 0) continue;
    ExponentVector t = g;
    t[a] -= 1;
    out.add_term(t, c * FieldScalar::rational(Rational(g[a]), f.mode()));
  }
  return out;
}

MultiPoly euler(const MultiPoly& f) {
  MultiPoly out(f.nvars(), f.mode());
  for (const auto& [g, c] : f.terms()) {
    out.add_term(g, c * FieldScalar::rational(Rational(total_degree(g)), f.mode()));
  }
  return out;
}

MultiPoly apply_delta(int i, const MultiPoly& f) {
  MultiPoly out(f.nvars(), f.mode());
  for (int j = 1; j <= f.nvars(); ++j) {
    if (j == i) continue;
    out += divided_difference(i, j, f);
  }
  return out;
}

MultiPoly apply_dunkl(int i, const MultiPoly& f, const ScalarContext& ctx) {
  if (ctx.mode() != f.mode()) throw Error("scalar mode mismatch");
  return partial(i, f) + apply_delta(i, f).scaled(ctx.theta());
}

MultiPoly apply_xD(int i, const MultiPoly& f, const ScalarContext& ctx) {
  return apply_dunkl(i, f, ctx).times_var(i);
}

MultiPoly apply_P(int m, const MultiPoly& f, const ScalarContext& ctx) {
  if (m < 1) throw Error("operator power must be at least 1");
  MultiPoly out(f.nvars(), f.mode());
  for (int i = 1; i <= f.nvars(); ++i) {
    MultiPoly h = f;
    for (int k = 0; k < m; ++k) h = apply_xD(i, h, ctx);
    out += h;
  }
  return out;
}

MultiPoly apply_T(int i, const MultiPoly& f, const ScalarContext& ctx) {
  if (i < 1 || i > f.nvars()) throw Error("index out of range");
  if (ctx.mode() != f.mode()) throw Error("scalar mode mismatch");
  int a = i - 1;
  FieldScalar theta = ctx.theta();
  MultiPoly out(f.nvars(), f.mode());
  for (const auto& [g, c] : f.terms()) {
    int below = 0;
    for (int b = 0; b < f.nvars(); ++b) {
      if (g[b] < g[a]) ++below;
    }
    if (injected_fault() == Fault::t_diag) ++below;
    FieldScalar diag = ctx.integer(g[a]) + theta * ctx.integer(below);
    out.add_term(g, c * diag);
    for (int b = 0; b < f.nvars(); ++b) {
      if (g[b] <= g[a]) continue;
      ExponentVector t = g;
      std::swap(t[a], t[b]);
      out.add_term(t, -(c * theta));
    }
  }
  return out;
}

MultiPoly apply_T_sum_power(int m, const MultiPoly& f, const ScalarContext& ctx) {
  if (m < 1) throw Error("operator power must be at least 1");
  MultiPoly out(f.nvars(), f.mode());
  for (int i = 1; i <= f.nvars(); ++i) {
    MultiPoly h = f;
    for (int k = 0; k < m; ++k) h = apply_T(i, h, ctx);
    out += h;
  }
  return out;
}

MultiPoly exact_divide_by_diff(const MultiPoly& p, int i, int j) {
  if (i == j) throw Error("divisor indices must differ");
  if (i > j) return -exact_divide_by_diff(p, j, i);
  int a = i - 1, b = j - 1;
  MultiPoly rem = p;
  MultiPoly quo(p.nvars(), p.mode());
  while (!rem.is_zero()) {
    ExponentVector g = rem.terms().begin()->first;  // grlex leading term
    FieldScalar c = rem.terms().begin()->second;
    if (g[a] == 0) throw Error("nonexact division by variable difference");
    g[a] -= 1;
    quo.add_term(g, c);
    // rem -= c x^g (x_i - x_j)
    g[a] += 1;
    rem.add_term(g, -c);
    g[a] -= 1;
    g[b] += 1;
    rem.add_term(g, c);
  }
  return quo;
}

MultiPoly apply_cms(const MultiPoly& f, const ScalarContext& ctx) {
  if (ctx.mode() != f.mode()) throw Error("scalar mode mismatch");
  if (!is_symmetric(f)) throw Error("input polynomial is not symmetric");
  int n = f.nvars();
  MultiPoly out(n, f.mode());
  for (int i = 1; i <= n; ++i) {
    MultiPoly xd = partial(i, f).times_var(i);
    out += partial(i, xd).times_var(i);
  }
  // The (i,j) and (j,i) summands combine into
  //   (x_i + x_j) (x_i df/dx_i - x_j df/dx_j) / (x_i - x_j),
  // whose numerator vanishes on x_i = x_j for symmetric f, so the division
  // is exact.
  FieldScalar theta = ctx.theta();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      MultiPoly num = partial(i, f).times_var(i) - partial(j, f).times_var(j);
      MultiPoly q = exact_divide_by_diff(num, i, j);
      out += (q.times_var(i) + q.times_var(j)).scaled(theta);
    }
  }
  return out;
}

FieldScalar dunkl_pairing(const MultiPoly& f, const MultiPoly& g, const ScalarContext& ctx) {
  if (f.nvars() != g.nvars()) throw Error("variable count mismatch");
  if (f.mode() != g.mode() || f.mode() != ctx.mode()) throw Error("scalar mode mismatch");
  FieldScalar acc = ctx.zero();
  ExponentVector origin(f.nvars(), 0);
  for (const auto& [gamma, c] : f.terms()) {
    MultiPoly h = g.homogeneous_part(total_degree(gamma));
    if (h.is_zero()) continue;
    for (int i = 0; i < f.nvars() && !h.is_zero(); ++i) {
      for (int k = 0; k < gamma[i]; ++k) h = apply_dunkl(i + 1, h, ctx);
    }
    acc += c * h.coeff(origin);
  }
  return acc;
}

}  // namespace hp
