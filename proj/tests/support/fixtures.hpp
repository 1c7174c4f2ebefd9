#pragma once

#include <string>

#include "loday/expression.hpp"
#include "loday/factories.hpp"

namespace fixtures {

using namespace loday;

inline ChartPtr chart(std::initializer_list<CoordinateSpec> specs) { return Chart::make(specs); }

/// Parses against the chart; shorthand for the tests.
inline SuperPolynomial P(const ChartPtr& c, const std::string& src) { return parse_polynomial(src, c); }

/// (R^{1|1}, x even, theta odd).
inline ChartPtr line11() { return chart({{"x", Parity::Even, {}}, {"theta", Parity::Odd, {}}}); }

/// (R^{2|2}) with theta weight one.
inline ChartPtr plane22() {
  return chart({{"x1", Parity::Even, {}}, {"x2", Parity::Even, {}}, {"theta1", Parity::Odd, Weight{1}},
                {"theta2", Parity::Odd, Weight{1}}});
}

/// Q = sum theta^i d/dx^i on R^{n|n} laid out as (x..., theta...).
inline VectorField de_rham(const ChartPtr& c) {
  const auto n = c->size() / 2;
  std::vector<SuperPolynomial> comps(c->size(), SuperPolynomial(c));
  for (std::size_t i = 0; i < n; ++i) comps[i] = SuperPolynomial::coordinate(c, n + i);
  return VectorField(c, Parity::Odd, comps);
}

inline OddJacobiStructure de_rham_manifold() {
  auto c = plane22();
  return make_q_manifold(c, de_rham(c));
}

inline ChartPtr point() { return Chart::make({}); }

inline SuperPolynomial constant(const ChartPtr& c, int v) { return SuperPolynomial::constant(c, Rational(v)); }

/// [e1, e2] = e2 over a point, in the storage convention of LieAlgebroidData.
inline LieAlgebroidData solvable_algebra() {
  auto pt = point();
  LieAlgebroidData d(pt, {Parity::Even, Parity::Even});
  d.set_structure(1, 0, 1, constant(pt, 1));
  return d;
}

inline OddJacobiStructure solvable_jacobi(int q1, int q2) {
  auto d = solvable_algebra();
  return make_jacobi_algebroid(d, CocycleData{{constant(d.base(), q1), constant(d.base(), q2)}});
}

/// su(2) with Q^c_{ba} = eps_{bac}; `bump` adds one to the listed entry
/// (0 means none, 1..3 the entries Q^3_{12}, Q^1_{23}, Q^2_{31}).
inline LieAlgebroidData su2(int bump = 0) {
  auto pt = point();
  LieAlgebroidData d(pt, {Parity::Even, Parity::Even, Parity::Even});
  d.set_structure(2, 0, 1, constant(pt, bump == 1 ? 2 : 1));
  d.set_structure(0, 1, 2, constant(pt, bump == 2 ? 2 : 1));
  d.set_structure(1, 2, 0, constant(pt, bump == 3 ? 2 : 1));
  return d;
}

inline OddJacobiStructure lie_structure(const LieAlgebroidData& d) {
  auto L = make_lie_algebroid(d);
  return make_q_manifold(L.chart, L.Q);
}

}  // namespace fixtures

#ifdef CATCH_VERSION_MAJOR
template <>
struct Catch::StringMaker<loday::SuperPolynomial> {
  static std::string convert(const loday::SuperPolynomial& f) { return loday::print_expr(f); }
};
#endif
