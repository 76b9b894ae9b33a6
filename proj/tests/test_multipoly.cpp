#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hp/multipoly.hpp"

using hp::ExponentVector;
using hp::MultiPoly;
using hp::Partition;
using hp::Permutation;
using hp::Rational;
using hp::ScalarContext;

namespace {

const ScalarContext kCtx = ScalarContext::at(Rational(1));

MultiPoly mono(const ExponentVector& g) { return MultiPoly::monomial(g, kCtx.one()); }

}  // namespace

TEST_CASE("basis of a rearrangement class") {
  auto b = hp::v_lambda_basis(Partition({2, 1, 0}), 3);
  CHECK(b.size() == 6);
  CHECK(b.front() == ExponentVector({2, 1, 0}));  // lex-descending, class first
  auto b2 = hp::v_lambda_basis(Partition({1, 1, 0}), 3);
  CHECK(b2.size() == 3);
  CHECK(b2.front() == ExponentVector({1, 1, 0}));
  CHECK(hp::v_lambda_basis(Partition({4, 4, 4}), 3).size() == 1);
}

TEST_CASE("basis count is the multinomial coefficient") {
  // 5 over (2,1,2)
  CHECK(hp::v_lambda_basis(Partition({3, 3, 1, 0, 0}), 5).size() == 30);
  CHECK(hp::v_lambda_basis(Partition({2, 1, 1, 0}), 4).size() == 12);
}

TEST_CASE("permutation action on monomials") {
  // (1,2) x1^2 x2 = x1 x2^2
  MultiPoly f = mono({2, 1, 0});
  Permutation swap12 = Permutation::transposition(3, 1, 2);
  CHECK(hp::permute_action(swap12, f) == mono({1, 2, 0}));
  // (1,2,3) x1^2 x2 = x2^2 x3
  Permutation cyc = Permutation::cycle(3, {1, 2, 3});
  CHECK(hp::permute_action(cyc, f) == mono({0, 2, 1}));
  // (1,3)(1,2) = (1,2,3) with rightmost applied first
  Permutation swap13 = Permutation::transposition(3, 1, 3);
  CHECK(swap13 * swap12 == cyc);
  CHECK(hp::permute_action(swap13, hp::permute_action(swap12, f)) ==
        hp::permute_action(cyc, f));
  // identity
  CHECK(hp::permute_action(Permutation(3), f) == f);
}

TEST_CASE("action is a group action on random monomials") {
  std::mt19937 rng(4242);
  for (int n = 2; n <= 5; ++n) {
    auto perms = hp::all_permutations(n);
    std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> exp(0, 4);
    for (int trial = 0; trial < 30; ++trial) {
      ExponentVector g(n);
      for (int i = 0; i < n; ++i) g[i] = exp(rng);
      const Permutation& s = perms[pick(rng)];
      const Permutation& t = perms[pick(rng)];
      MultiPoly f = mono(g);
      CHECK(hp::permute_action(s * t, f) ==
            hp::permute_action(s, hp::permute_action(t, f)));
      // sorting is permutation-invariant
      CHECK(hp::sort_to_partition(s.apply(g)) == hp::sort_to_partition(g));
    }
  }
}

TEST_CASE("monomial symmetric polynomials") {
  CHECK(hp::monomial_symmetric(Partition({1}), 2, kCtx) == mono({1, 0}) + mono({0, 1}));
  CHECK(hp::monomial_symmetric(Partition({1, 1}), 3, kCtx) ==
        mono({1, 1, 0}) + mono({1, 0, 1}) + mono({0, 1, 1}));
  CHECK(hp::monomial_symmetric(Partition({2, 1}), 2, kCtx) == mono({2, 1}) + mono({1, 2}));
}

TEST_CASE("symmetry detection and expansion") {
  MultiPoly f = hp::monomial_symmetric(Partition({2, 1}), 3, kCtx) +
                hp::monomial_symmetric(Partition({1, 1, 1}), 3, kCtx).scaled(kCtx.integer(5));
  CHECK(hp::is_symmetric(f));
  auto coeffs = hp::to_msym_basis(f);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[0].first == Partition({2, 1}));
  CHECK(coeffs[0].second == kCtx.one());
  CHECK(coeffs[1].first == Partition({1, 1, 1}));
  CHECK(coeffs[1].second == kCtx.integer(5));
  CHECK_FALSE(hp::is_symmetric(mono({2, 1, 0})));
  CHECK_THROWS_AS(hp::to_msym_basis(mono({2, 1, 0})), hp::Error);
}

TEST_CASE("zero coefficients are never stored") {
  MultiPoly f = mono({1, 0}) - mono({1, 0});
  CHECK(f.is_zero());
  CHECK(f.term_count() == 0);
  MultiPoly g = mono({1, 0});
  g.add_term({1, 0}, -kCtx.one());
  CHECK(g.is_zero());
}

TEST_CASE("degree and homogeneity") {
  MultiPoly f = mono({2, 1}) + mono({0, 1});
  CHECK(f.degree() == 3);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.homogeneous_part(1) == mono({0, 1}));
  CHECK(mono({2, 1}).is_homogeneous());
}
