#include "loday/loday_bracket.hpp"

#include "loday/errors.hpp"

namespace loday {

namespace {

template <class Op>
SuperPolynomial split_first(const SuperPolynomial& f, Op&& op) {
  if (auto p = grade_info(f).parity) return op(f, *p);
  auto [even, odd] = split_parity(f);
  return op(even, Parity::Even) + op(odd, Parity::Odd);
}

}  // namespace

SuperPolynomial loday_bracket(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g) {
  require_same_chart(f.chart(), J.chart(), "loday_bracket");
  return split_first(f, [&](const SuperPolynomial& a, Parity pa) {
    return sgn(bit(pa) + 1) * odd_jacobi_bracket(J, apply(J.Q(), a), g);
  });
}

SuperPolynomial loday_bracket_coords(const OddJacobiStructure& J, const SuperPolynomial& f,
                                     const SuperPolynomial& g) {
  require_same_chart(f.chart(), J.chart(), "loday_bracket_coords");
  require_same_chart(g.chart(), J.chart(), "loday_bracket_coords");
  const auto& chart = *J.chart();
  const auto n = chart.size();
  const auto& Q = J.Q();
  return split_first(f, [&](const SuperPolynomial& a, Parity pa) {
    const int fp = bit(pa);
    std::vector<SuperPolynomial> da;
    for (std::size_t i = 0; i < n; ++i) da.push_back(left_partial(a, i));
    const auto Qa = apply(Q, a);  // Q^A d_A f
    SuperPolynomial out(J.chart());
    for (std::size_t B = 0; B < n; ++B) {
      const auto dgB = left_partial(g, B);
      if (dgB.is_zero()) continue;
      const int Bp = bit(chart[B].parity);
      SuperPolynomial inner(J.chart());
      for (std::size_t A = 0; A < n; ++A) {
        const auto sba = schouten_coefficient(J, B, A);
        if (sba.is_zero()) continue;
        const int Ap = bit(chart[A].parity);
        for (std::size_t C = 0; C < n; ++C) {
          if (!Q.component(C).is_zero() && !da[A].is_zero())
            inner += sgn(Ap) * (sba * Q.component(C) * left_partial(da[A], C));
          const auto dQ = left_partial(Q.component(C), A);
          if (!dQ.is_zero() && !da[C].is_zero()) inner += sba * dQ * da[C];
        }
      }
      inner -= Q.component(B) * Qa;
      out += sgn(Bp * (fp + 1) + 1) * (inner * dgB);
    }
    return out;
  });
}

VectorField hamiltonian_Y(const OddJacobiStructure& J, const SuperPolynomial& f) {
  const Parity pf = parity_of(f);
  const auto& chart = J.chart();
  std::vector<SuperPolynomial> comps;
  comps.reserve(chart->size());
  for (std::size_t a = 0; a < chart->size(); ++a)
    comps.push_back(loday_bracket(J, f, SuperPolynomial::coordinate(chart, a)));
  return VectorField(chart, pf, std::move(comps));
}

SuperPolynomial derived_product(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g) {
  require_same_chart(f.chart(), J.chart(), "derived_product");
  require_same_chart(g.chart(), J.chart(), "derived_product");
  return split_first(f, [&](const SuperPolynomial& a, Parity pa) {
    return sgn(bit(pa) + 1) * (apply(J.Q(), a) * g);
  });
}

SuperPolynomial star_commutator(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g) {
  const int s = sgn((bit(parity_of(f)) + 1) * (bit(parity_of(g)) + 1));
  return derived_product(J, f, g) - s * derived_product(J, g, f);
}

SuperPolynomial q_bracket(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g) {
  require_same_chart(g.chart(), J.chart(), "q_bracket");
  return split_first(f, [&](const SuperPolynomial& a, Parity pa) { return sgn(bit(pa)) * apply(J.Q(), a * g); });
}

}  // namespace loday
