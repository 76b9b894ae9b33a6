#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hp/matrix.hpp"

using hp::ExactMatrix;
using hp::FieldScalar;
using hp::Rational;
using hp::ScalarContext;
using hp::ThetaMode;
using hp::UPoly;

namespace {

ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()),
                ThetaMode::specialized);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) {
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          FieldScalar::rational(Rational(rows[i][j]), ThetaMode::specialized);
    }
  }
  return m;
}

FieldScalar q(long v) { return FieldScalar::rational(Rational(v), ThetaMode::specialized); }

}  // namespace

TEST_CASE("charpoly of the swap matrix is t^2 - 1") {
  UPoly p = hp::charpoly(from_ints({{0, 1}, {1, 0}}));
  CHECK(p == UPoly(ThetaMode::specialized, {q(-1), q(0), q(1)}));
}

TEST_CASE("charpoly of a symbolic triangular matrix") {
  ScalarContext ctx = ScalarContext::symbolic();
  ExactMatrix m(2, 2, ctx.mode());
  m.at(0, 0) = ctx.integer(2) + ctx.theta();
  m.at(0, 1) = -ctx.theta();
  UPoly p = hp::charpoly(m);
  // t^2 - (2 + theta) t
  CHECK(p.coeff(0).is_zero());
  CHECK(p.coeff(1) == -(ctx.integer(2) + ctx.theta()));
  CHECK(p.coeff(2).is_one());
}

TEST_CASE("charpoly of the frozen operator-sum matrix") {
  // Matrix of the squared truncated operators on the three monomials of
  // degree pattern (1,1,0) at theta = 1; expanded by hand: (t-4)(t-10)^2.
  UPoly p = hp::charpoly(from_ints({{8, -2, -2}, {-2, 8, -2}, {-2, -2, 8}}));
  CHECK(p == UPoly(ThetaMode::specialized, {q(-400), q(180), q(-24), q(1)}));
}

TEST_CASE("symbolic cap is a hard error") {
  ExactMatrix m(3, 3, ThetaMode::symbolic);
  CHECK_THROWS_WITH_AS(hp::charpoly(m, 2), doctest::Contains("specialized"), hp::Error);
  CHECK_NOTHROW(hp::charpoly(m, 3));
}

TEST_CASE("trace equals minus the second charpoly coefficient") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    ExactMatrix m(n, n, ThetaMode::specialized);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = q(entry(rng));
    UPoly p = hp::charpoly(m);
    CHECK(m.trace() == -p.coeff(n - 1));
    // Cayley-Hamilton: the matrix is a root of its own charpoly.
    ExactMatrix acc(n, n, ThetaMode::specialized);
    ExactMatrix power = ExactMatrix::identity(n, ThetaMode::specialized);
    for (int d = 0; d <= p.degree(); ++d) {
      acc = acc + power.scaled(p.coeff(d));
      if (d < p.degree()) power = power * m;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("symbolic charpoly commutes with specialization") {
  ScalarContext sym = ScalarContext::symbolic();
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix m(3, 3, sym.mode());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m.at(i, j) = sym.integer(entry(rng)) + sym.theta() * sym.integer(entry(rng));
      }
    }
    UPoly p = hp::charpoly(m);
    for (long t = 0; t <= 2; ++t) {
      Rational theta0(t, 2);
      ScalarContext spec = ScalarContext::at(theta0);
      ExactMatrix ms(3, 3, spec.mode());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ms.at(i, j) = spec.rational(m.at(i, j).eval_at(theta0));
      UPoly ps = hp::charpoly(ms);
      for (int d = 0; d <= 3; ++d) {
        CHECK(p.coeff(d).eval_at(theta0) == ps.coeff(d).rat());
      }
    }
  }
}

TEST_CASE("kernel examples") {
  CHECK(hp::kernel_basis(from_ints({{1, 0}, {0, 1}})).empty());
  CHECK(hp::kernel_basis(from_ints({{0, 0}, {0, 0}})).size() == 2);
  auto basis = hp::kernel_basis(from_ints({{1, 1}, {1, 1}}));
  REQUIRE(basis.size() == 1);
  // proportional to (1, -1)
  CHECK(basis[0][0] + basis[0][1] == q(0));
  CHECK_FALSE(basis[0][0].is_zero());
}

TEST_CASE("kernel vectors satisfy M v = 0 and count cols - rank") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 2 + static_cast<int>(rng() % 3);
    int cols = 2 + static_cast<int>(rng() % 3);
    ExactMatrix m(rows, cols, ThetaMode::specialized);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = q(entry(rng));
    auto basis = hp::kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == cols - hp::rank(m));
    for (const auto& v : basis) {
      for (int i = 0; i < rows; ++i) {
        FieldScalar acc = q(0);
        for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("linear solve") {
  ExactMatrix m = from_ints({{1, 2}, {3, 4}});
  auto sol = hp::solve_linear(m, {q(5), q(11)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular[0] == q(1));
  CHECK(sol->particular[1] == q(2));
  CHECK(sol->kernel.empty());
  // Inconsistent system
  ExactMatrix s = from_ints({{1, 1}, {1, 1}});
  CHECK_FALSE(hp::solve_linear(s, {q(0), q(1)}).has_value());
}

TEST_CASE("factor_monic splits repeated quadratics") {
  // (t^2 - 2)^2 has no rational roots; the square-free step must find it.
  UPoly quad(ThetaMode::specialized, {q(-2), q(0), q(1)});
  auto factors = hp::factor_monic(quad * quad);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].factor == quad);
  CHECK(factors[0].multiplicity == 2);
  CHECK_FALSE(factors[0].residual);
}

TEST_CASE("factor_monic extracts rational roots with multiplicity") {
  UPoly p = UPoly::linear_root(q(3)).pow(2) * UPoly::linear_root(q(-1)) *
            UPoly::linear_root(FieldScalar::rational(Rational(1, 2), ThetaMode::specialized));
  auto factors = hp::factor_monic(p);
  int total = 0;
  for (const auto& f : factors) {
    CHECK(f.factor.degree() == 1);
    total += f.multiplicity;
  }
  CHECK(total == 4);
}

TEST_CASE("factor_monic splits a product of distinct quadratics") {
  UPoly q1(ThetaMode::specialized, {q(-2), q(0), q(1)});   // t^2 - 2
  UPoly q2(ThetaMode::specialized, {q(-3), q(0), q(1)});   // t^2 - 3
  auto factors = hp::factor_monic(q1 * q2);
  REQUIRE(factors.size() == 2);
  for (const auto& f : factors) {
    CHECK(f.factor.degree() == 2);
    CHECK_FALSE(f.residual);
  }
}
