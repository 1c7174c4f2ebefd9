#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "loday/errors.hpp"
#include "oracle.hpp"

using namespace loday;
using fixtures::P;

TEST_CASE("lift names, parities and weights", "[phasespace]") {
  auto ps = lift(fixtures::chart({{"x", Parity::Even, Weight{2}}}));
  REQUIRE(ps.lifted()->size() == 2);
  CHECK((*ps.lifted())[1].name == "p_x");
  CHECK((*ps.lifted())[1].parity == Parity::Even);
  CHECK((*ps.lifted())[1].weight == Weight{-2});

  auto odd = lift(fixtures::chart({{"tau", Parity::Odd, {}}}));
  CHECK((*odd.lifted())[0].parity == Parity::Odd);
  CHECK((*odd.lifted())[1].parity == Parity::Odd);
  CHECK((*odd.lifted())[1].name == "p_tau");

  auto empty = lift(Chart::make({}));
  CHECK(empty.lifted()->empty());
}

TEST_CASE("canonical bracket examples", "[phasespace]") {
  auto base = fixtures::chart({{"x", Parity::Even, {}}, {"theta", Parity::Odd, {}}});
  auto ps = lift(base);
  for (std::size_t a = 0; a < base->size(); ++a)
    CHECK(canonical_poisson(ps, ps.momentum(a), ps.position(a)) == SuperPolynomial::constant(ps.lifted(), 1));
  const auto L = ps.lifted();
  CHECK(canonical_poisson(ps, P(L, "p_x * theta + x"), SuperPolynomial::constant(L, 7)).is_zero());
  CHECK(canonical_poisson(ps, P(L, "p_x^2"), P(L, "x")) == P(L, "2 * p_x"));
}

TEST_CASE("embed, project and fibre degree", "[phasespace]") {
  auto base = fixtures::line11();
  auto ps = lift(base);
  const auto f = P(base, "x * theta + 3");
  CHECK(ps.project(ps.embed(f)) == f);
  CHECK_THROWS_AS(ps.project(ps.momentum(0)), DegreeError);
  CHECK(fiber_degree(ps, P(ps.lifted(), "p_x * p_theta + x * p_x * p_theta")) == 2u);
  CHECK_FALSE(fiber_degree(ps, P(ps.lifted(), "p_x + p_x * p_theta")).has_value());
  CHECK_FALSE(fiber_degree(ps, SuperPolynomial(ps.lifted())).has_value());
  CHECK_THROWS_AS(canonical_poisson(ps, f, f), ChartError);
}

TEST_CASE("canonical bracket matches the oracle", "[phasespace]") {
  auto base = fixtures::chart({{"x", Parity::Even, {}}, {"a", Parity::Odd, {}}, {"b", Parity::Odd, {}}});
  auto ps = lift(base);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    auto F = oracle::random_any(ps.lifted(), rng, 3, 3);
    auto G = oracle::random_any(ps.lifted(), rng, 3, 3);
    CHECK(canonical_poisson(ps, F, G) == oracle::poisson(ps, F, G));
  }
}
