// Acceptance suite: runs every promised exact identity at its stated range
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hp/operators.hpp"
#include "hp/spectra.hpp"
#include "hp/verify.hpp"

using namespace hp;

namespace {

struct Criterion {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::vector<Partition> partitions_up_to(int max_total, int max_parts, int min_total = 0) {
  std::vector<Partition> out;
  for (int total = min_total; total <= max_total; ++total) {
    for (const Partition& p : partitions_of(total, max_parts)) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Commutativity of the power-sum operators.

void criterion_commutativity(Criterion& c) {
  for (const char* theta : {"1/2", "1", "2"}) {
    for (int n = 2; n <= 3; ++n) {
      VerifyOptions opts;
      opts.n = n;
      opts.maxdeg = 5;
      opts.ctx = ScalarContext::parse(theta);
      for (const std::string& v : verify_commutativity(opts)) {
        c.expect(false, std::string("theta=") + theta + " n=" + std::to_string(n) + ": " + v);
      }
      c.expect(true, "");
    }
  }
  VerifyOptions sym;
  sym.n = 2;
  sym.maxdeg = 3;
  sym.ctx = ScalarContext::symbolic();
  for (const std::string& v : verify_commutativity(sym)) c.expect(false, "symbolic: " + v);
  c.expect(true, "");
}

// ---------------------------------------------------------------------------
// 2. Symmetric eigenvalues: h-sum = matrix power = series = brute symmetric
//    block = eigenvalue on the symmetric eigenfunction, in Q(theta).

void criterion_symmetric_eigenvalues(Criterion& c) {
  ScalarContext sym = ScalarContext::symbolic();
  for (int n = 2; n <= 4; ++n) {
    for (const Partition& lambda : partitions_up_to(5, n)) {
      std::vector<FieldScalar> series = eig_sym_series(lambda, n, 4, sym);
      JackResult jack = jack_polynomial(lambda, n, sym);
      MultiPoly msym = monomial_symmetric(lambda, n, sym);
      for (int m = 1; m <= 4; ++m) {
        std::string tag = "lambda=" + lambda.str() + " n=" + std::to_string(n) +
                          " m=" + std::to_string(m);
        // eig_sym_closed computes the alternating h-sum and the triangular
        // matrix power and checks them against each other internally.
        FieldScalar closed = eig_sym_closed(lambda, m, n, sym);
        c.expect(series[m] == closed, "series mismatch " + tag);
        c.expect(eig_sym_profile(lambda, m, n, sym) == closed, "profile mismatch " + tag);
        MultiPoly image = apply_T_sum_power(m, msym, sym);
        c.expect(image == msym.scaled(closed), "brute symmetric block mismatch " + tag);
        c.expect(apply_P(m, jack.poly, sym) == jack.poly.scaled(closed),
                 "eigenfunction eigenvalue mismatch " + tag);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 3. Trace formulas, both branches, exactly in Q(theta).

void criterion_traces(Criterion& c) {
  ScalarContext sym = ScalarContext::symbolic();
  SpectrumOptions opts{40};
  // distinct parts (as n-tuples, zeros included): the one-cycle branch
  for (int n = 2; n <= 4; ++n) {
    for (const Partition& lambda : partitions_up_to(6, n, 1)) {
      if (!lambda.has_distinct_parts(n)) continue;
      for (const Partition& tau : partitions_of(n, n)) {
        for (int m = 1; m <= 4; ++m) {
          bool ok = trace_isotypic_closed(lambda, tau, m, n, sym) ==
                    trace_isotypic_brute(lambda, tau, m, n, sym, opts);
          c.expect(ok, "distinct-branch trace: lambda=" + lambda.str() + " tau=" + tau.str() +
                           " n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
      }
    }
  }
  // repeated parts: the averaged-character branch
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& lambda : partitions_up_to(5, n, 1)) {
      if (lambda.has_distinct_parts(n)) continue;
      for (const Partition& tau : partitions_of(n, n)) {
        for (int m = 1; m <= 3; ++m) {
          bool ok = trace_isotypic_closed(lambda, tau, m, n, sym) ==
                    trace_isotypic_brute(lambda, tau, m, n, sym, opts);
          c.expect(ok, "general-branch trace: lambda=" + lambda.str() + " tau=" + tau.str() +
                           " n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 4. The three-variable catalog, symbolically.

void criterion_catalog(Criterion& c) {
  ScalarContext sym = ScalarContext::symbolic();
  Partition tau_sym({3}), tau_std({2, 1}), tau_sgn({1, 1, 1});
  auto block_of = [](const SpectrumReport& report, const Partition& tau) -> const BlockReport* {
    for (const auto& b : report.blocks) {
      if (b.tau == tau) return &b;
    }
    return nullptr;
  };
  for (int a = 0; a <= 4; ++a) {
    // equal parts: the one-dimensional class with eigenvalue 3 a^m
    for (int m = 1; m <= 4; ++m) {
      Partition lambda({a, a, a});
      auto entries = n3_catalog(lambda, m, sym);
      FieldScalar expected = sym.integer(3) * sym.integer(a).pow(m);
      c.expect(entries.size() == 1 && entries[0].factor == UPoly::linear_root(expected),
               "equal-parts catalog a=" + std::to_string(a) + " m=" + std::to_string(m));
      c.expect(eig_sym_closed(lambda, m, 3, sym) == expected,
               "equal-parts closed form a=" + std::to_string(a) + " m=" + std::to_string(m));
    }
    for (int b = 0; b < a; ++b) {
      // two-block shapes: symmetric value x1, paired value x2
      for (const Partition& lambda : {Partition({a, a, b}), Partition({a, b, b})}) {
        for (int m = 1; m <= 4; ++m) {
          std::string tag = "lambda=" + lambda.str_padded(3) + " m=" + std::to_string(m);
          auto entries = n3_catalog(lambda, m, sym);
          SpectrumReport report = spectrum_on_v_lambda(lambda, m, 3, sym);
          c.expect(report.all_ok(), "spectrum verdicts " + tag);
          const BlockReport* bs = block_of(report, tau_sym);
          const BlockReport* bp = block_of(report, tau_std);
          c.expect(bs != nullptr && bp != nullptr && entries.size() == 2, "blocks " + tag);
          if (bs && bp && entries.size() == 2) {
            c.expect(bs->block_charpoly == entries[0].factor, "symmetric entry " + tag);
            c.expect(bp->block_charpoly == entries[1].factor * entries[1].factor,
                     "paired entry " + tag);
          }
        }
      }
      // distinct parts
      for (int cc = 0; cc < b; ++cc) {
        Partition lambda({a, b, cc});
        for (int m = 1; m <= 4; ++m) {
          std::string tag = "lambda=" + lambda.str_padded(3) + " m=" + std::to_string(m);
          auto entries = n3_catalog(lambda, m, sym);
          SpectrumReport report = spectrum_on_v_lambda(lambda, m, 3, sym);
          c.expect(report.all_ok(), "spectrum verdicts " + tag);
          const BlockReport* bs = block_of(report, tau_sym);
          const BlockReport* bp = block_of(report, tau_std);
          const BlockReport* bg = block_of(report, tau_sgn);
          c.expect(bs && bp && bg && entries.size() == 3, "blocks " + tag);
          if (bs && bp && bg && entries.size() == 3) {
            c.expect(bs->block_charpoly == entries[0].factor,
                     "symmetric eigenvalue " + tag);
            c.expect(entries[1].factor.degree() == 2 &&
                         bp->block_charpoly == entries[1].factor * entries[1].factor,
                     "squared quadratic " + tag);
            c.expect(bg->block_charpoly == entries[2].factor, "skew eigenvalue " + tag);
            // the quadratic's sum and product against the displayed pair
            FieldScalar s = -entries[1].factor.coeff(1);
            std::vector<FieldScalar> ell = ell_values(lambda, 3, sym);
            FieldScalar sum_pm = sym.zero();
            for (const auto& l : ell) sum_pm += l.pow(m);
            FieldScalar h = h_complete(m - 2, ell, sym);
            c.expect(s == sym.integer(2) * sum_pm - sym.theta() * sym.theta() * h,
                     "pair sum " + tag);
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Two-block corollary: the full spectrum on the two-block class.

void criterion_two_block(Criterion& c) {
  std::vector<ScalarContext> contexts{ScalarContext::symbolic(), ScalarContext::at(Rational(1, 2)),
                                      ScalarContext::at(Rational(1)), ScalarContext::at(Rational(2))};
  for (int n = 2; n <= 5; ++n) {
    for (int eta = 1; eta < n; ++eta) {
      for (int a = 1; a <= 3; ++a) {
        for (int b = 0; b < a; ++b) {
          std::vector<int> parts;
          for (int i = 0; i < n - eta; ++i) parts.push_back(a);
          for (int i = 0; i < eta; ++i) parts.push_back(b);
          Partition lambda(parts);
          int kmax = std::min(eta, n - eta);
          for (const ScalarContext& ctx : contexts) {
            for (int m = 1; m <= 3; ++m) {
              std::string tag = "lambda=" + lambda.str_padded(n) + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m) + " theta=" + ctx.theta_str();
              SpectrumReport report = spectrum_on_v_lambda(lambda, m, n, ctx);
              c.expect(report.all_ok(), "spectrum verdicts " + tag);
              c.expect(static_cast<int>(report.blocks.size()) == kmax + 1,
                       "hook-shaped isotypes only " + tag);
              for (const auto& block : report.blocks) {
                int k = block.tau.part(1);
                bool hook_two_row = block.tau.length() <= 2 && block.tau.part(0) == n - k;
                c.expect(hook_two_row && k <= kmax, "isotype shape " + tag);
                if (!hook_two_row) continue;
                int iso = isotypic_dimension(lambda, block.tau, n);
                c.expect(block.isotypic_dim == iso, "isotypic dimension " + tag);
                FieldScalar value = eig_two_block(n, eta, a, b, m, k, ctx);
                c.expect(block.block_charpoly == UPoly::linear_root(value).pow(iso),
                         "two-block eigenvalue k=" + std::to_string(k) + " " + tag);
              }
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 6. Character identities.

void criterion_characters(Criterion& c) {
  for (int n = 2; n <= 7; ++n) {
    for (const Partition& tau : partitions_of(n, n)) {
      for (int k = 1; k <= n; ++k) {
        std::vector<int> cls{k};
        for (int i = k; i < n; ++i) cls.push_back(1);
        c.expect(character_one_cycle(tau, k, n) == character(tau, Partition(cls)),
                 "one-cycle formula: tau=" + tau.str() + " k=" + std::to_string(k));
      }
    }
  }
  // averaged characters against the (n-1,1) closed form; singleton subsets
  // give the orbit-count value instead (see the ledgered formula edge case)
  for (int n = 2; n <= 6; ++n) {
    Partition tau({n - 1, 1});
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
      if (left == 0) {
        comps.push_back(cur);
        return;
      }
      for (int b = 1; b <= left; ++b) {
        cur.push_back(b);
        rec(left - b);
        cur.pop_back();
      }
    };
    rec(n);
    for (const auto& blocks : comps) {
      int p = static_cast<int>(blocks.size());
      for (int mask = 1; mask < (1 << p); ++mask) {
        AveragedCharacterSpec spec;
        spec.block_sizes = blocks;
        for (int a = 0; a < p; ++a) {
          if (mask & (1 << a)) spec.subset.push_back(a + 1);
        }
        Rational avg = averaged_character(tau, spec);
        bool ok = spec.subset.size() >= 2 ? avg == averaged_character_n11(spec)
                                          : avg == Rational(p - 1);
        c.expect(ok, "standard-isotype averaged character n=" + std::to_string(n));
      }
    }
  }
  // two-block spherical values
  for (int n = 2; n <= 6; ++n) {
    for (int eta = 1; eta < n; ++eta) {
      for (int k = 0; k <= std::min(eta, n - eta); ++k) {
        std::vector<int> tparts{n - k};
        if (k > 0) tparts.push_back(k);
        AveragedCharacterSpec spec{{n - eta, eta}, {1, 2}};
        c.expect(averaged_character(Partition(tparts), spec) == spherical_p2(n, eta, k),
                 "spherical value n=" + std::to_string(n) + " eta=" + std::to_string(eta) +
                     " k=" + std::to_string(k));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 7. Structural lemmas.

void criterion_structural(Criterion& c) {
  ScalarContext sym = ScalarContext::symbolic();
  for (int n = 2; n <= 3; ++n) {
    VerifyOptions opts;
    opts.n = n;
    opts.maxdeg = 5;
    opts.ctx = sym;
    for (const std::string& v : verify_triangularity(opts)) {
      c.expect(false, "triangularity n=" + std::to_string(n) + ": " + v);
    }
    c.expect(true, "");
    opts.maxdeg = 4;
    for (const std::string& v : verify_selfadjoint(opts)) {
      c.expect(false, "self-adjointness n=" + std::to_string(n) + ": " + v);
    }
    c.expect(true, "");
  }
  for (int n = 2; n <= 4; ++n) {
    VerifyOptions opts;
    opts.n = n;
    opts.maxdeg = 5;
    opts.ctx = sym;
    for (const std::string& v : verify_cms(opts)) {
      c.expect(false, "restriction to symmetric polynomials n=" + std::to_string(n) + ": " + v);
    }
    c.expect(true, "");
  }
  // vanishing criterion: the isotypic dimension is nonzero exactly on the
  // dominance cone above the multiplicity partition
  for (int n = 2; n <= 4; ++n) {
    for (const Partition& lambda : partitions_up_to(5, n)) {
      for (const Partition& tau : partitions_of(n, n)) {
        bool inside = dominance_leq(mult_partition(lambda, n), tau);
        bool nonzero = isotypic_dimension(lambda, tau, n) > 0;
        c.expect(inside == nonzero, "vanishing criterion lambda=" + lambda.str_padded(n) +
                                        " tau=" + tau.str());
      }
    }
  }
  // eigenfunction counts per isotype, from the constructed joint bases
  std::vector<std::pair<Partition, int>> cases;
  for (const Partition& lambda : partitions_up_to(4, 3, 1)) cases.emplace_back(lambda, 3);
  cases.emplace_back(Partition({2, 1, 1, 0}), 4);
  for (const auto& [lambda, n] : cases) {
    bool counted = false;
    for (const char* theta : {"1", "2", "5/3"}) {
      try {
        auto fns = joint_eigenbasis(lambda, n, {1, 2}, ScalarContext::parse(theta));
        std::map<std::string, int> counts;
        int total = 0;
        for (const auto& fn : fns) {
          if (fn.mu != lambda) continue;
          ++total;
          if (fn.tau) counts[fn.tau->str()]++;
        }
        c.expect(total == static_cast<int>(v_lambda_basis(lambda, n).size()),
                 "leading-class function count lambda=" + lambda.str_padded(n));
        for (const Partition& tau : partitions_of(n, n)) {
          c.expect(counts[tau.str()] == isotypic_dimension(lambda, tau, n),
                   "eigenfunction count lambda=" + lambda.str_padded(n) + " tau=" + tau.str() +
                       " theta=" + theta);
        }
        counted = true;
        break;
      } catch (const Error&) {
        continue;  // eigenvalue collision at this theta; try the next one
      }
    }
    c.expect(counted, "joint eigenbasis construction lambda=" + lambda.str_padded(n));
  }
}

// ---------------------------------------------------------------------------
// 8. Command-line contract with fault injection.

int run_cli(const std::string& args, const std::string& env) {
  std::string cmd = env + " " + std::string(HP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void criterion_cli(Criterion& c) {
  c.expect(run_cli("verify all --n 3 --maxdeg 4 --theta 1", "") == 0,
           "clean build must verify");
  for (const char* fault : {"eig-hsum", "t-diag", "avgchar-norm"}) {
    int code = run_cli("verify all --n 3 --maxdeg 4 --theta 1",
                       std::string("HP_FAULT_INJECT=") + fault);
    c.expect(code == 1, std::string("fault '") + fault + "' must flip the verdict to 1");
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"1 commutativity [P_m, P_k] = 0", criterion_commutativity},
      {"2 symmetric eigenvalues, five routes", criterion_symmetric_eigenvalues},
      {"3 trace formulas, both branches", criterion_traces},
      {"4 three-variable catalog", criterion_catalog},
      {"5 two-block spectrum", criterion_two_block},
      {"6 character identities", criterion_characters},
      {"7 structural lemmas", criterion_structural},
      {"8 CLI contract and fault injection", criterion_cli},
  };
  int failed = 0;
  for (auto& [name, fn] : criteria) {
    Criterion c;
    c.name = name;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    if (c.failures.empty()) {
      std::cout << "PASS criterion " << name << " (" << c.checks << " checks)\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << name << " (" << c.failures.size() << " of " << c.checks
                << " checks failed)\n";
      for (size_t i = 0; i < c.failures.size() && i < 5; ++i) {
        std::cout << "      " << c.failures[i] << "\n";
      }
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
