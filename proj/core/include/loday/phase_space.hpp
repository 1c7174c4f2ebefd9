#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "loday/chart.hpp"
#include "loday/superpoly.hpp"

namespace loday {

/// Cotangent lift of a base chart: the base coordinates x^A followed by one
/// momentum p_A per base coordinate, named "p_<name>", with the parity of x^A
/// and weight -w(x^A).
class PhaseSpace {
 public:
  static PhaseSpace lift(ChartPtr base);

  const ChartPtr& base() const noexcept { return base_; }
  const ChartPtr& lifted() const noexcept { return lifted_; }
  std::size_t dimension() const noexcept { return base_->size(); }
  std::size_t momentum_index(std::size_t a) const noexcept { return base_->size() + a; }
  bool is_momentum(std::size_t lifted_index) const noexcept { return lifted_index >= base_->size(); }

  /// x^A as a function on the lifted chart.
  SuperPolynomial position(std::size_t a) const;
  SuperPolynomial momentum(std::size_t a) const;

  /// Pullback of a base function.
  SuperPolynomial embed(const SuperPolynomial& base_fn) const;
  /// Inverse of embed; throws DegreeError if a momentum occurs.
  SuperPolynomial project(const SuperPolynomial& fiber_fn) const;

  friend bool operator==(const PhaseSpace& a, const PhaseSpace& b) {
    return same_chart(a.base_, b.base_) && same_chart(a.lifted_, b.lifted_);
  }

 private:
  PhaseSpace(ChartPtr base, ChartPtr lifted);

  ChartPtr base_;
  ChartPtr lifted_;
  std::vector<std::size_t> embedding_;
};

inline PhaseSpace lift(ChartPtr base) { return PhaseSpace::lift(std::move(base)); }

/// Total degree in the momenta when every term agrees; nullopt when mixed.
/// The zero function reports nullopt.
std::optional<unsigned> fiber_degree(const PhaseSpace& ps, const SuperPolynomial& fiber_fn);

/// Canonical Poisson bracket on the cotangent lift, left derivatives:
///   {F,G} = sum_A (-1)^{A F + A} dF/dp_A dG/dx^A - (-1)^{A F} dF/dx^A dG/dp_A.
/// Inhomogeneous F is split by parity.
SuperPolynomial canonical_poisson(const PhaseSpace& ps, const SuperPolynomial& F, const SuperPolynomial& G);

}  // namespace loday
