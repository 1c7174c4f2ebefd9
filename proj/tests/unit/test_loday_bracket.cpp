#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace loday;
using fixtures::P;

TEST_CASE("Loday bracket examples", "[lodaypoisson]") {
  auto J = make_odd_contact(1);
  const auto& c = J.chart();
  for (auto g : {"x", "tau", "x * xs * tau", "7"}) CHECK(loday_bracket(J, unit(J), P(c, g)).is_zero());

  const auto tt = loday_bracket(J, P(c, "tau"), P(c, "tau"));
  REQUIRE(tt.term_count() == 1);
  CHECK(tt.degree() == 0);
  CHECK(tt == SuperPolynomial::constant(c, 1));

  auto M = fixtures::de_rham_manifold();
  CHECK(loday_bracket(M, P(M.chart(), "x1"), P(M.chart(), "x2")) == P(M.chart(), "-theta1 * theta2"));
}

TEST_CASE("Q-manifold coordinate form", "[lodaypoisson]") {
  auto M = fixtures::de_rham_manifold();
  const auto& c = *M.chart();
  std::mt19937_64 rng(23);
  for (int k = 0; k < 30; ++k) {
    auto f = oracle::random(M.chart(), rng, k % 2 ? Parity::Odd : Parity::Even);
    auto g = oracle::random_any(M.chart(), rng);
    const int pf = bit(parity_of(f));
    SuperPolynomial expected(M.chart());
    const auto Qf = apply_Q(M, f);
    for (std::size_t B = 0; B < c.size(); ++B)
      expected += sgn(bit(c[B].parity) * (pf + 1)) * (M.Q().component(B) * Qf * left_partial(g, B));
    CHECK(loday_bracket(M, f, g) == expected);
    CHECK(loday_bracket(M, f, g) == sgn(pf + 1) * (Qf * apply_Q(M, g)));
  }
}

TEST_CASE("Loday coordinate form and oracle agree", "[lodaypoisson]") {
  for (const auto& J : {make_odd_contact(1), fixtures::solvable_jacobi(1, 0), fixtures::de_rham_manifold()}) {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 100; ++k) {
      auto f = oracle::random_any(J.chart(), rng);
      auto g = oracle::random_any(J.chart(), rng);
      const auto l = loday_bracket(J, f, g);
      CHECK(l == loday_bracket_coords(J, f, g));
      CHECK(l == oracle::loday(J, f, g));
    }
  }
}

TEST_CASE("Hamiltonian fields Y_f", "[lodaypoisson]") {
  auto J = make_odd_contact(1);
  const auto& c = J.chart();
  CHECK(hamiltonian_Y(J, unit(J)).is_zero());
  const auto Yt = hamiltonian_Y(J, P(c, "tau"));
  CHECK((Yt == J.Q() || Yt == -J.Q()));
  CHECK(Yt == hamiltonian_X(J, apply_Q(J, P(c, "tau"))));

  // Y depends only on the Q-cohomology class.
  const auto f = P(c, "x * xs + tau * x");
  const auto g = P(c, "x^2 * tau * xs");
  CHECK(hamiltonian_Y(J, f) == hamiltonian_Y(J, f + apply_Q(J, g)));
}

TEST_CASE("derived product", "[lodaypoisson]") {
  auto J = make_odd_contact(1);
  const auto& c = J.chart();
  const auto one = unit(J);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    auto f = oracle::random(c, rng, k % 2 ? Parity::Odd : Parity::Even);
    auto g = oracle::random(c, rng, k % 3 ? Parity::Odd : Parity::Even);
    CHECK(derived_product(J, one, f).is_zero());
    const int pf = bit(parity_of(f));
    CHECK(derived_product(J, f, one) == sgn(pf + 1) * apply_Q(J, f));
    CHECK(star_commutator(J, one, g) == -apply_Q(J, g));
    if (pf == 0) {
      CHECK(star_commutator(J, f, f) == 2 * derived_product(J, f, f));
      CHECK(star_commutator(J, f, f) == -2 * (apply_Q(J, f) * f));
    }
    CHECK(q_bracket(J, f, g) == sgn(pf) * apply_Q(J, f * g));
  }

  auto l = fixtures::line11();
  std::vector<SuperPolynomial> comps{P(l, "theta"), P(l, "0")};
  auto M = make_q_manifold(l, VectorField(l, Parity::Odd, comps));
  CHECK(derived_product(M, P(l, "x"), P(l, "x")) == P(l, "-theta * x"));
  CHECK(star_commutator(M, P(l, "theta"), P(l, "theta")).is_zero());
}
