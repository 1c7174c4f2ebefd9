#include "loday/phase_space.hpp"

#include <numeric>

#include "loday/errors.hpp"

namespace loday {

PhaseSpace::PhaseSpace(ChartPtr base, ChartPtr lifted) : base_(std::move(base)), lifted_(std::move(lifted)) {
  embedding_.resize(base_->size());
  std::iota(embedding_.begin(), embedding_.end(), std::size_t{0});
}

PhaseSpace PhaseSpace::lift(ChartPtr base) {
  if (!base) throw ChartError("lift: null chart");
  auto specs = base->specs();
  const auto n = specs.size();
  for (std::size_t a = 0; a < n; ++a) specs.push_back({"p_" + specs[a].name, specs[a].parity, -specs[a].weight});
  return PhaseSpace(std::move(base), Chart::make(std::move(specs)));
}

SuperPolynomial PhaseSpace::position(std::size_t a) const { return SuperPolynomial::coordinate(lifted_, a); }

SuperPolynomial PhaseSpace::momentum(std::size_t a) const {
  return SuperPolynomial::coordinate(lifted_, momentum_index(a));
}

SuperPolynomial PhaseSpace::embed(const SuperPolynomial& base_fn) const {
  require_same_chart(base_fn.chart(), base_, "embed");
  return reembed(base_fn, lifted_, embedding_);
}

SuperPolynomial PhaseSpace::project(const SuperPolynomial& fiber_fn) const {
  require_same_chart(fiber_fn.chart(), lifted_, "project");
  const auto n = base_->size();
  SuperPolynomial out(base_);
  for (const auto& [m, c] : fiber_fn.terms()) {
    Monomial b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = m[i];
    for (std::size_t i = n; i < 2 * n; ++i)
      if (m[i] != 0) throw DegreeError("project: function depends on momentum '" + (*lifted_)[i].name + "'");
    out.add_term(b, c);
  }
  return out;
}

std::optional<unsigned> fiber_degree(const PhaseSpace& ps, const SuperPolynomial& fiber_fn) {
  require_same_chart(fiber_fn.chart(), ps.lifted(), "fiber_degree");
  std::optional<unsigned> deg;
  const auto n = ps.dimension();
  for (const auto& [m, c] : fiber_fn.terms()) {
    unsigned d = 0;
    for (std::size_t i = n; i < 2 * n; ++i) d += m[i];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

namespace {

SuperPolynomial poisson_homogeneous(const PhaseSpace& ps, const SuperPolynomial& F, Parity f_parity,
                                    const SuperPolynomial& G) {
  SuperPolynomial out(ps.lifted());
  const int f = bit(f_parity);
  for (std::size_t a = 0; a < ps.dimension(); ++a) {
    const int A = bit((*ps.base())[a].parity);
    const auto pa = ps.momentum_index(a);
    const auto dF_dp = left_partial(F, pa);
    if (!dF_dp.is_zero()) {
      const auto dG_dx = left_partial(G, a);
      if (!dG_dx.is_zero()) out += sgn(A * f + A) * (dF_dp * dG_dx);
    }
    const auto dF_dx = left_partial(F, a);
    if (!dF_dx.is_zero()) {
      const auto dG_dp = left_partial(G, pa);
      if (!dG_dp.is_zero()) out -= sgn(A * f) * (dF_dx * dG_dp);
    }
  }
  return out;
}

}  // namespace

SuperPolynomial canonical_poisson(const PhaseSpace& ps, const SuperPolynomial& F, const SuperPolynomial& G) {
  require_same_chart(F.chart(), ps.lifted(), "canonical_poisson");
  require_same_chart(G.chart(), ps.lifted(), "canonical_poisson");
  if (auto p = grade_info(F).parity) return poisson_homogeneous(ps, F, *p, G);
  auto [even, odd] = split_parity(F);
  return poisson_homogeneous(ps, even, Parity::Even, G) + poisson_homogeneous(ps, odd, Parity::Odd, G);
}

}  // namespace loday
