#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "loday/errors.hpp"
#include "oracle.hpp"

using namespace loday;
using fixtures::P;

TEST_CASE("structure conditions", "[oddjacobi]") {
  CHECK(check_structure(make_odd_contact(1)).valid());
  CHECK(check_structure(make_odd_contact(2)).valid());
  CHECK(check_structure(fixtures::de_rham_manifold()).valid());

  auto c = fixtures::line11();
  std::vector<SuperPolynomial> comps{P(c, "theta"), P(c, "1")};
  const auto J = make_q_manifold(c, VectorField(c, Parity::Odd, comps));
  const auto r = check_structure(J);
  CHECK_FALSE(r.homological.pass);
  CHECK(r.homological.defect == P(J.phase_space().lifted(), "2 * p_x"));
  CHECK(r.invariance.pass);
  CHECK(r.compatibility.pass);
  CHECK_FALSE(r.valid());
}

TEST_CASE("construction rejects bad parity and degree", "[oddjacobi]") {
  auto c = fixtures::line11();
  auto ps = lift(c);
  const auto L = ps.lifted();
  const VectorField zero(c, Parity::Odd);
  CHECK_THROWS_AS(OddJacobiStructure(ps, P(L, "p_x * p_x"), zero), StructureError);
  CHECK_THROWS_AS(OddJacobiStructure(ps, P(L, "p_theta"), zero), StructureError);
  CHECK_THROWS_AS(OddJacobiStructure(ps, P(L, "p_x * p_theta + theta * p_x"), zero), StructureError);
  CHECK_THROWS_AS(OddJacobiStructure(ps, SuperPolynomial(L), VectorField::partial(c, 0)), StructureError);
  CHECK_NOTHROW(OddJacobiStructure(ps, P(L, "x * p_x * p_theta"), zero));
}

TEST_CASE("odd bracket examples", "[oddjacobi]") {
  auto J = make_odd_contact(1);
  const auto& c = J.chart();
  const auto one = unit(J);
  for (auto g : {"x", "tau", "xs * tau + x^2", "3"}) CHECK(odd_jacobi_bracket(J, one, P(c, g)) == apply_Q(J, P(c, g)));
  CHECK(odd_jacobi_bracket(J, P(c, "2"), P(c, "5")).is_zero());

  auto J2 = make_odd_contact(2);
  const auto& c2 = J2.chart();
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      const auto v = odd_jacobi_bracket(J2, P(c2, "x" + std::to_string(a)), P(c2, "xs" + std::to_string(b)));
      CHECK(v == SuperPolynomial::constant(c2, a == b ? -1 : 0));
    }
}

TEST_CASE("Q-manifold odd bracket", "[oddjacobi]") {
  auto J = fixtures::de_rham_manifold();
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    auto f = oracle::random(J.chart(), rng, k % 2 ? Parity::Odd : Parity::Even);
    auto g = oracle::random_any(J.chart(), rng);
    CHECK(odd_jacobi_bracket(J, f, g) == sgn(bit(parity_of(f))) * apply_Q(J, f * g));
  }
}

TEST_CASE("coordinate form and oracle agree", "[oddjacobi]") {
  for (const auto& J : {make_odd_contact(1), fixtures::solvable_jacobi(1, 0)}) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
      auto f = oracle::random_any(J.chart(), rng);
      auto g = oracle::random_any(J.chart(), rng);
      const auto b = odd_jacobi_bracket(J, f, g);
      CHECK(b == odd_jacobi_bracket_coords(J, f, g));
      CHECK(b == oracle::odd_bracket(J, f, g));
    }
  }
}

TEST_CASE("Schouten coefficients", "[oddjacobi]") {
  auto J = make_odd_contact(1);
  const auto& c = J.chart();
  // S = p_x p_xs - xs p_xs p_tau.
  CHECK(schouten_coefficient(J, 1, 0) == SuperPolynomial::constant(c, 1));
  CHECK(schouten_coefficient(J, 0, 1) == SuperPolynomial::constant(c, 1));
  CHECK(schouten_coefficient(J, 2, 1) == P(c, "-xs"));
  CHECK(schouten_coefficient(J, 1, 2) == P(c, "xs"));
  CHECK(schouten_coefficient(J, 0, 0).is_zero());
}

TEST_CASE("Hamiltonian fields X_f", "[oddjacobi]") {
  auto J = make_odd_contact(2);
  const auto& c = J.chart();
  CHECK(hamiltonian_X(J, unit(J)) == J.Q());
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      const auto X = hamiltonian_X(J, P(c, "x" + std::to_string(a)));
      const auto g = P(c, "xs" + std::to_string(b));
      CHECK(apply(X, g) == odd_jacobi_bracket(J, P(c, "x" + std::to_string(a)), g));
      CHECK(apply(X, g) == SuperPolynomial::constant(c, a == b ? -1 : 0));
    }

  auto M = fixtures::de_rham_manifold();
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    auto f = oracle::random(M.chart(), rng, k % 2 ? Parity::Odd : Parity::Even);
    // (-1)^f [[f,g]] - Q(f) g = Q(fg) - Q(f) g = (-1)^f f Q(g).
    CHECK(hamiltonian_X(M, f) == sgn(bit(parity_of(f))) * (f * M.Q()));
    if (parity_of(f) == Parity::Even) CHECK(hamiltonian_X(M, f) == f * M.Q());
  }
}

TEST_CASE("Jacobi vector fields", "[oddjacobi]") {
  auto J = make_odd_contact(1);
  const auto& c = J.chart();
  CHECK(is_jacobi_field(J, J.Q()).pass);
  CHECK(is_jacobi_field(J, VectorField(c, Parity::Even)).pass);
  CHECK(is_jacobi_field(J, hamiltonian_X(J, P(c, "x * xs"))).pass);
  const auto r = is_jacobi_field(J, hamiltonian_X(J, P(c, "tau")));
  CHECK_FALSE(r.pass);
  CHECK_FALSE((r.s_residual.is_zero() && r.q_residual.is_zero()));
}
