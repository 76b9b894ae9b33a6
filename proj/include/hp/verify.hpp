#pragma once

#include <string>
#include <vector>

#include "hp/scalar.hpp"
#include "hp/spectra.hpp"

namespace hp {

// Exhaustive identity suites behind the `verify` subcommand. Each returns a
// list of human-readable violations; empty means the suite passed. Any
// exception raised by an internal cross-check is converted into a violation
// by run_verify_suite, so a corrupted build reports rather than aborts.
struct VerifyOptions {
  int n = 3;
  int maxdeg = 4;
  ScalarContext ctx = ScalarContext::at(Rational(1));
  unsigned seed = 12345;
  int symbolic_cap = kDefaultSymbolicCap;
};

// [P_m, P_k] f = 0 plus the commutator identities of the building blocks
// (Dunkl operators, difference parts, the derived mixed commutator).
std::vector<std::string> verify_commutativity(const VerifyOptions& opts);

// P_m x^g minus the truncated sum-of-powers is supported on strictly
// dominated rearrangement classes.
std::vector<std::string> verify_triangularity(const VerifyOptions& opts);

// <x_i D_i f, g> = <f, x_i D_i g> under the pairing f(D) g at 0.
std::vector<std::string> verify_selfadjoint(const VerifyOptions& opts);

// P_2 on symmetric polynomials agrees with the conjugated CMS operator.
std::vector<std::string> verify_cms(const VerifyOptions& opts);

// Closed trace formulas against explicit projector traces, for every
// isotype; both the distinct-parts and the general branches.
std::vector<std::string> verify_traces(const VerifyOptions& opts);

// Three-variable catalog against the brute-force spectrum (n = 3 only).
std::vector<std::string> verify_catalog(const VerifyOptions& opts);

// Runs one named suite ("commutativity", ..., "all").
std::vector<std::string> run_verify_suite(const std::string& name, const VerifyOptions& opts);

std::vector<std::string> verify_suite_names();

}  // namespace hp
