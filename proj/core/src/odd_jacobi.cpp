#include "loday/odd_jacobi.hpp"

#include "loday/errors.hpp"

namespace loday {

OddJacobiStructure::OddJacobiStructure(PhaseSpace ps, SuperPolynomial S, VectorField Q)
    : ps_(std::move(ps)), S_(std::move(S)), Q_(std::move(Q)), Q_symbol_(ps_.lifted()) {
  require_same_chart(S_.chart(), ps_.lifted(), "odd Jacobi structure (S)");
  require_same_chart(Q_.chart(), ps_.base(), "odd Jacobi structure (Q)");
  if (!S_.is_zero()) {
    const auto info = grade_info(S_);
    if (info.parity != Parity::Odd) throw StructureError("S must be odd");
    const auto deg = fiber_degree(ps_, S_);
    if (!deg || *deg != 2) throw StructureError("S must be of degree two in the fibre coordinates");
  }
  if (!Q_.is_zero() && Q_.parity() != Parity::Odd) throw StructureError("Q must be an odd vector field");
  Q_symbol_ = symbol(Q_, ps_);
}

StructureReport check_structure(const OddJacobiStructure& J) {
  const auto& ps = J.phase_space();
  const auto& Qs = J.Q_symbol();
  StructureReport r{{true, canonical_poisson(ps, Qs, Qs)},
                    {true, canonical_poisson(ps, Qs, J.S())},
                    {true, canonical_poisson(ps, J.S(), J.S()) + 2 * (Qs * J.S())}};
  r.homological.pass = r.homological.defect.is_zero();
  r.invariance.pass = r.invariance.defect.is_zero();
  r.compatibility.pass = r.compatibility.defect.is_zero();
  return r;
}

SuperPolynomial unit(const OddJacobiStructure& J) { return SuperPolynomial::constant(J.chart(), Rational(1)); }

namespace {

template <class Homogeneous>
SuperPolynomial bilinear(const SuperPolynomial& f, const SuperPolynomial& g, Homogeneous&& op) {
  const auto pf = grade_info(f).parity;
  const auto pg = grade_info(g).parity;
  if (pf && pg) return op(f, *pf, g, *pg);
  auto fs = split_parity(f);
  auto gs = split_parity(g);
  SuperPolynomial out(f.chart());
  for (auto [fp, fpar] : {std::pair{&fs.even, Parity::Even}, std::pair{&fs.odd, Parity::Odd}}) {
    if (fp->is_zero()) continue;
    for (auto [gp, gpar] : {std::pair{&gs.even, Parity::Even}, std::pair{&gs.odd, Parity::Odd}}) {
      if (gp->is_zero()) continue;
      out += op(*fp, fpar, *gp, gpar);
    }
  }
  return out;
}

}  // namespace

SuperPolynomial odd_jacobi_bracket(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g) {
  require_same_chart(f.chart(), J.chart(), "odd_jacobi_bracket");
  require_same_chart(g.chart(), J.chart(), "odd_jacobi_bracket");
  const auto& ps = J.phase_space();
  return bilinear(f, g, [&](const SuperPolynomial& a, Parity pa, const SuperPolynomial& b, Parity) {
    const int s = sgn(bit(pa) + 1);
    const auto A = ps.embed(a);
    const auto B = ps.embed(b);
    auto out = s * canonical_poisson(ps, canonical_poisson(ps, J.S(), A), B);
    out -= s * canonical_poisson(ps, J.Q_symbol(), A * B);
    return ps.project(out);
  });
}

SuperPolynomial schouten_coefficient(const OddJacobiStructure& J, std::size_t b, std::size_t a) {
  const auto& ps = J.phase_space();
  return ps.project(left_partial(left_partial(J.S(), ps.momentum_index(a)), ps.momentum_index(b)));
}

SuperPolynomial odd_jacobi_bracket_coords(const OddJacobiStructure& J, const SuperPolynomial& f,
                                          const SuperPolynomial& g) {
  require_same_chart(f.chart(), J.chart(), "odd_jacobi_bracket_coords");
  require_same_chart(g.chart(), J.chart(), "odd_jacobi_bracket_coords");
  const auto& chart = *J.chart();
  const auto n = chart.size();
  return bilinear(f, g, [&](const SuperPolynomial& a, Parity pa, const SuperPolynomial& b, Parity) {
    const int fp = bit(pa);
    SuperPolynomial out(J.chart());
    for (std::size_t B = 0; B < n; ++B) {
      const int Bp = bit(chart[B].parity);
      const auto dbB = left_partial(b, B);
      if (dbB.is_zero()) continue;
      for (std::size_t A = 0; A < n; ++A) {
        const auto daA = left_partial(a, A);
        if (daA.is_zero()) continue;
        const auto sba = schouten_coefficient(J, B, A);
        if (sba.is_zero()) continue;
        out += sgn((Bp + 1) * fp + 1) * (sba * daA * dbB);
      }
    }
    out += sgn(fp) * (apply(J.Q(), a) * b);
    out += a * apply(J.Q(), b);
    return out;
  });
}

VectorField hamiltonian_X(const OddJacobiStructure& J, const SuperPolynomial& f) {
  const Parity pf = parity_of(f);
  const auto& chart = J.chart();
  const auto Qf = apply(J.Q(), f);
  std::vector<SuperPolynomial> comps;
  comps.reserve(chart->size());
  for (std::size_t a = 0; a < chart->size(); ++a) {
    const auto xa = SuperPolynomial::coordinate(chart, a);
    comps.push_back(sgn(bit(pf)) * odd_jacobi_bracket(J, f, xa) - Qf * xa);
  }
  VectorField X(chart, pf + 1, std::move(comps));

  const auto& ps = J.phase_space();
  const auto F = ps.embed(f);
  const auto chi = -canonical_poisson(ps, J.S(), F) + sgn(bit(pf)) * (F * J.Q_symbol());
  if (!(symbol(X, ps) == chi)) throw InternalError("hamiltonian_X: bracket and symbol routes disagree");
  return X;
}

JacobiFieldReport is_jacobi_field(const OddJacobiStructure& J, const VectorField& X) {
  const auto& ps = J.phase_space();
  const auto chi = symbol(X, ps);
  JacobiFieldReport r{true, canonical_poisson(ps, chi, J.S()), canonical_poisson(ps, chi, J.Q_symbol())};
  r.pass = r.s_residual.is_zero() && r.q_residual.is_zero();
  return r;
}

}  // namespace loday
