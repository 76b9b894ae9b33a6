// Command-line surface: eigenvalue queries, spectra, traces, characters,
// eigenfunction construction, and the verification suites, with JSON, CSV,
// and pretty output. Exit codes: 0 success (and verification with no
// violations), 1 violations found, 2 usage errors.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hp/characters.hpp"
#include "hp/matrix.hpp"
#include "hp/spectra.hpp"
#include "hp/verify.hpp"

using nlohmann::json;

namespace {

enum class Format { json, csv, pretty };

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "pretty") return Format::pretty;
  throw CLI::ValidationError("--format", "expected json, csv, or pretty");
}

int env_symbolic_cap() {
  const char* v = std::getenv("HP_SYMBOLIC_CAP");
  if (v == nullptr || *v == '\0') return hp::kDefaultSymbolicCap;
  return std::atoi(v);
}

json report_json(const hp::SpectrumReport& report) {
  json j;
  j["n"] = report.nvars;
  j["lambda"] = report.lambda.str_padded(report.nvars);
  j["m"] = report.m;
  j["theta"] = report.theta;
  j["eigenvalues"] = json::array();
  for (const auto& rec : report.records) {
    json r;
    if (rec.value) {
      r["value"] = rec.value->str();
    } else {
      r["minpoly"] = rec.minpoly->str();
    }
    r["mult"] = rec.multiplicity;
    r["tau"] = rec.tau ? rec.tau->str() : "unresolved";
    if (rec.residual) r["residual"] = true;
    j["eigenvalues"].push_back(std::move(r));
  }
  j["blocks"] = json::array();
  for (const auto& b : report.blocks) {
    j["blocks"].push_back({{"tau", b.tau.str()},
                           {"dim", b.isotypic_dim},
                           {"charpoly", b.block_charpoly.str()}});
  }
  j["verdicts"] = json::array();
  for (const auto& v : report.verdicts) {
    j["verdicts"].push_back({{"check", v.check}, {"ok", v.ok}, {"detail", v.detail}});
  }
  return j;
}

constexpr const char* kCsvHeader = "n,lambda,tau,m,theta,value,mult,provenance";

void emit_report(const hp::SpectrumReport& report, Format format, std::ostream& os) {
  if (format == Format::json) {
    os << report_json(report).dump() << "\n";
    return;
  }
  if (format == Format::csv) {
    os << kCsvHeader << "\n";
    for (const auto& rec : report.records) {
      os << report.nvars << ",\"" << rec.lambda.str_padded(report.nvars) << "\",\""
         << (rec.tau ? rec.tau->str() : "unresolved") << "\"," << rec.m << "," << report.theta
         << ",\"" << (rec.value ? rec.value->str() : rec.minpoly->str()) << "\","
         << rec.multiplicity << ","
         << (rec.provenance == hp::Provenance::closed_form ? "closed-form" : "brute-force")
         << "\n";
    }
    return;
  }
  os << "spectrum of sum_i T_i^" << report.m << " on V_(" << report.lambda.str_padded(report.nvars)
     << "), n = " << report.nvars << ", theta = " << report.theta << "\n";
  for (const auto& rec : report.records) {
    os << "  tau = " << (rec.tau ? rec.tau->str() : "unresolved") << "  ";
    if (rec.value) {
      os << "value " << rec.value->str();
    } else {
      os << "factor " << rec.minpoly->str();
    }
    os << "  x" << rec.multiplicity << (rec.residual ? "  (unfactored)" : "") << "\n";
  }
  for (const auto& v : report.verdicts) {
    os << "  [" << (v.ok ? "ok" : "FAIL") << "] " << v.check << "\n";
  }
}

std::vector<int> parse_m_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw CLI::ValidationError("--m-list", "expected comma-separated powers");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of Dunkl-operator power sums on polynomials"};
  app.require_subcommand(1);

  std::string lambda_text, tau_text, theta_text = "1", format_text = "json";
  std::string mlist_text = "1,2", blocks_text, subset_text, suite_name;
  int nvars = 3, m = 1, m_max = 4;
  int maxdeg = 4, cap = env_symbolic_cap();
  unsigned seed = 12345;

  auto add_common = [&](CLI::App* cmd, bool needs_theta = true) {
    cmd->add_option("--n", nvars, "number of variables")->required();
    if (needs_theta) cmd->add_option("--theta", theta_text, "rational value p/q, or 'sym'");
    cmd->add_option("--format", format_text, "json|csv|pretty");
    cmd->add_option("--cap", cap, "symbolic-mode dimension cap");
  };

  CLI::App* eig = app.add_subcommand("eig", "closed-form symmetric eigenvalue");
  add_common(eig);
  eig->add_option("--lambda", lambda_text, "partition, e.g. 2,1,0")->required();
  eig->add_option("--m", m, "operator power")->required();

  CLI::App* series = app.add_subcommand("series", "eigenvalue generating-function series");
  add_common(series);
  series->add_option("--lambda", lambda_text)->required();
  series->add_option("--mmax", m_max, "series order");

  CLI::App* spectrum = app.add_subcommand("spectrum", "isotypic spectrum on V_lambda");
  add_common(spectrum);
  spectrum->add_option("--lambda", lambda_text)->required();
  spectrum->add_option("--m", m)->required();

  CLI::App* trace = app.add_subcommand("trace", "isotypic trace, closed and brute forms");
  add_common(trace);
  trace->add_option("--lambda", lambda_text)->required();
  trace->add_option("--tau", tau_text, "isotype partition")->required();
  trace->add_option("--m", m)->required();

  CLI::App* jack = app.add_subcommand("jack", "symmetric eigenfunction coefficients");
  add_common(jack);
  jack->add_option("--lambda", lambda_text)->required();
  jack->add_option("--m-list", mlist_text, "powers whose eigenvalues to attach");

  CLI::App* basis = app.add_subcommand("basis", "joint eigenbasis of the dominated span");
  add_common(basis);
  basis->add_option("--lambda", lambda_text)->required();
  basis->add_option("--m-list", mlist_text, "operator powers, e.g. 1,2");

  CLI::App* chr = app.add_subcommand("char", "irreducible character value");
  chr->add_option("--n", nvars)->required();
  chr->add_option("--tau", tau_text)->required();
  chr->add_option("--class", lambda_text, "cycle type, e.g. 3 or 2,1")->required();
  chr->add_option("--format", format_text);

  CLI::App* avg = app.add_subcommand("avgchar", "averaged (spherical) character");
  avg->add_option("--n", nvars)->required();
  avg->add_option("--tau", tau_text)->required();
  avg->add_option("--blocks", blocks_text, "block sizes n_1,...,n_p")->required();
  avg->add_option("--subset", subset_text, "selected blocks a_1,...,a_k")->required();
  avg->add_option("--format", format_text);

  CLI::App* cat = app.add_subcommand("catalog3", "three-variable eigenvalue catalog");
  add_common(cat);
  cat->add_option("--lambda", lambda_text)->required();
  cat->add_option("--m", m)->required();

  CLI::App* verify = app.add_subcommand("verify", "identity verification suites");
  verify->add_option("suite", suite_name, "commutativity|triangularity|selfadjoint|cms|traces|catalog|all")
      ->required();
  add_common(verify);
  verify->add_option("--maxdeg", maxdeg, "degree bound for the sweeps");
  verify->add_option("--seed", seed, "seed for randomized sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Format format = parse_format(format_text);
    hp::ScalarContext ctx = hp::ScalarContext::parse(theta_text);
    hp::SpectrumOptions sopts{cap};

    if (eig->parsed()) {
      hp::Partition lambda = hp::Partition::parse(lambda_text);
      hp::FieldScalar value = hp::eig_sym_closed(lambda, m, nvars, ctx);
      if (format == Format::json) {
        std::cout << json{{"eigenvalue", value.str()}}.dump() << "\n";
      } else if (format == Format::csv) {
        std::cout << kCsvHeader << "\n"
                  << nvars << ",\"" << lambda.str() << "\",\"" << std::to_string(nvars)
                  << "\"," << m << "," << ctx.theta_str() << ",\"" << value.str()
                  << "\",1,closed-form\n";
      } else {
        std::cout << "eig_" << m << "(" << lambda.str() << ") = " << value.str() << "\n";
      }
      return 0;
    }
    if (series->parsed()) {
      hp::Partition lambda = hp::Partition::parse(lambda_text);
      auto values = hp::eig_sym_series(lambda, nvars, m_max, ctx);
      json arr = json::array();
      for (size_t i = 0; i < values.size(); ++i) {
        arr.push_back({{"m", i}, {"value", values[i].str()}});
      }
      if (format == Format::json) {
        std::cout << json{{"lambda", lambda.str()}, {"series", arr}}.dump() << "\n";
      } else {
        for (size_t i = 0; i < values.size(); ++i) {
          std::cout << "eig_" << i << " = " << values[i].str() << "\n";
        }
      }
      return 0;
    }
    if (spectrum->parsed()) {
      hp::Partition lambda = hp::Partition::parse(lambda_text);
      hp::SpectrumReport report = hp::spectrum_on_v_lambda(lambda, m, nvars, ctx, sopts);
      emit_report(report, format, std::cout);
      return report.all_ok() ? 0 : 1;
    }
    if (trace->parsed()) {
      hp::Partition lambda = hp::Partition::parse(lambda_text);
      hp::Partition tau = hp::Partition::parse(tau_text);
      hp::FieldScalar closed = hp::trace_isotypic_closed(lambda, tau, m, nvars, ctx);
      hp::FieldScalar brute = hp::trace_isotypic_brute(lambda, tau, m, nvars, ctx, sopts);
      bool ok = closed == brute;
      if (format == Format::json) {
        std::cout << json{{"lambda", lambda.str()},
                          {"tau", tau.str()},
                          {"m", m},
                          {"closed", closed.str()},
                          {"brute", brute.str()},
                          {"match", ok}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "closed = " << closed.str() << "\nbrute  = " << brute.str() << "\n";
      }
      return ok ? 0 : 1;
    }
    if (jack->parsed()) {
      hp::Partition lambda = hp::Partition::parse(lambda_text);
      hp::JackResult result = hp::jack_polynomial(lambda, nvars, ctx);
      json coeffs = json::array();
      for (const auto& [mu, c] : result.msym_coeffs) {
        coeffs.push_back({{"mu", mu.str()}, {"coeff", c.str()}});
      }
      json eigs = json::array();
      for (int power : parse_m_list(mlist_text)) {
        eigs.push_back({{"m", power},
                        {"value", hp::eig_sym_closed(lambda, power, nvars, ctx).str()}});
      }
      if (format == Format::json) {
        std::cout << json{{"lambda", lambda.str()},
                          {"msym_coefficients", coeffs},
                          {"eigenvalues", eigs},
                          {"polynomial", result.poly.str()}}
                         .dump()
                  << "\n";
      } else {
        std::cout << result.poly.str() << "\n";
      }
      return 0;
    }
    if (basis->parsed()) {
      hp::Partition lambda = hp::Partition::parse(lambda_text);
      auto functions = hp::joint_eigenbasis(lambda, nvars, parse_m_list(mlist_text), ctx, sopts);
      json arr = json::array();
      for (const auto& fn : functions) {
        json entries = json::array();
        for (const auto& e : fn.eigenvalues) {
          if (e.value) {
            entries.push_back({{"m", e.m}, {"value", e.value->str()}});
          } else {
            entries.push_back({{"m", e.m}, {"minpoly", e.minpoly->str()}});
          }
        }
        arr.push_back({{"mu", fn.mu.str()},
                       {"tau", fn.tau ? fn.tau->str() : "unresolved"},
                       {"eigenvalues", entries},
                       {"group", fn.group},
                       {"polynomial", fn.poly.str()}});
      }
      if (format == Format::json) {
        std::cout << json{{"lambda", lambda.str()}, {"functions", arr}}.dump() << "\n";
      } else {
        for (const auto& fn : functions) {
          std::cout << "mu=" << fn.mu.str() << " tau=" << (fn.tau ? fn.tau->str() : "?") << " "
                    << fn.poly.str() << "\n";
        }
      }
      return 0;
    }
    if (chr->parsed()) {
      hp::Partition tau = hp::Partition::parse(tau_text);
      hp::Partition cls = hp::Partition::parse(lambda_text);
      // Pad the class with fixed points up to n.
      std::vector<int> parts = cls.parts();
      while (cls.size() < nvars) {
        parts.push_back(1);
        cls = hp::Partition(parts);
      }
      hp::Rational value = hp::character(tau, cls);
      if (format == Format::json) {
        std::cout << json{{"value", value.str()}}.dump() << "\n";
      } else {
        std::cout << value.str() << "\n";
      }
      return 0;
    }
    if (avg->parsed()) {
      hp::Partition tau = hp::Partition::parse(tau_text);
      hp::AveragedCharacterSpec spec;
      for (int v : parse_m_list(blocks_text)) spec.block_sizes.push_back(v);
      for (int v : parse_m_list(subset_text)) spec.subset.push_back(v);
      hp::Rational value = hp::averaged_character(tau, spec);
      if (format == Format::json) {
        std::cout << json{{"value", value.str()}}.dump() << "\n";
      } else {
        std::cout << value.str() << "\n";
      }
      return 0;
    }
    if (cat->parsed()) {
      if (nvars != 3) throw hp::Error("catalog3 requires --n 3");
      hp::Partition lambda = hp::Partition::parse(lambda_text);
      auto entries = hp::n3_catalog(lambda, m, ctx);
      json arr = json::array();
      for (const auto& e : entries) {
        arr.push_back({{"shape", e.shape},
                       {"isotype", e.isotype},
                       {"factor", e.factor.str()},
                       {"mult", e.multiplicity},
                       {"leading", e.leading}});
      }
      if (format == Format::json) {
        std::cout << json{{"lambda", lambda.str()}, {"m", m}, {"entries", arr}}.dump() << "\n";
      } else {
        for (const auto& e : entries) {
          std::cout << e.shape << " " << e.isotype << ": " << e.factor.str() << " x"
                    << e.multiplicity << "\n";
        }
      }
      return 0;
    }
    if (verify->parsed()) {
      hp::VerifyOptions vopts;
      vopts.n = nvars;
      vopts.maxdeg = maxdeg;
      vopts.ctx = ctx;
      vopts.seed = seed;
      vopts.symbolic_cap = cap;
      auto violations = hp::run_verify_suite(suite_name, vopts);
      if (format == Format::json) {
        std::cout << json{{"suite", suite_name}, {"violations", violations}}.dump() << "\n";
      } else {
        if (violations.empty()) {
          std::cout << "suite " << suite_name << ": ok\n";
        } else {
          for (const auto& v : violations) std::cout << "violation: " << v << "\n";
        }
      }
      return violations.empty() ? 0 : 1;
    }
  } catch (const hp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
