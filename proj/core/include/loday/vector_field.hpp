#pragma once

#include <cstddef>
#include <vector>

#include "loday/chart.hpp"
#include "loday/phase_space.hpp"
#include "loday/superpoly.hpp"

namespace loday {

/// Parity-homogeneous derivation X = X^A d/dx^A on a base chart.
class VectorField {
 public:
  /// The zero field of the given parity.
  VectorField(ChartPtr base, Parity parity);
  /// Throws StructureError unless every nonzero component X^A has parity
  /// parity + parity(x^A); ChartError for wrong chart or component count.
  VectorField(ChartPtr base, Parity parity, std::vector<SuperPolynomial> components);

  /// d/dx^A.
  static VectorField partial(ChartPtr base, std::size_t a);

  const ChartPtr& chart() const noexcept { return chart_; }
  Parity parity() const noexcept { return parity_; }
  const SuperPolynomial& component(std::size_t a) const { return comps_.at(a); }
  const std::vector<SuperPolynomial>& components() const noexcept { return comps_; }
  bool is_zero() const noexcept;

  /// Sums require equal parity unless one side is zero.
  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(const Rational& c);

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator-(VectorField a) { return a *= Rational(-1); }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  friend VectorField operator*(int c, VectorField a) { return a *= Rational(c); }
  /// Left module action (f X)(g) = f X(g); parity f + X.
  friend VectorField operator*(const SuperPolynomial& f, const VectorField& X);

  /// Zero fields compare equal regardless of parity.
  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  ChartPtr chart_;
  Parity parity_;
  std::vector<SuperPolynomial> comps_;
};

/// X(f) = X^A df/dx^A, left derivatives.
SuperPolynomial apply(const VectorField& X, const SuperPolynomial& f);

/// Principal symbol: the fiber-linear function with {symbol(X), f} = X(f) for
/// every base function f. Concretely sum_A X^A p_A.
SuperPolynomial symbol(const VectorField& X, const PhaseSpace& ps);

/// Inverse of `symbol` on fiber-degree-1 functions: X^A = {F, x^A}.
/// Throws DegreeError unless F has fiber degree exactly 1 (zero F gives the
/// zero field of parity `zero_parity`).
VectorField field_from_symbol(const SuperPolynomial& F, const PhaseSpace& ps, Parity zero_parity = Parity::Even);

/// Graded commutator, defined as field_from_symbol({symbol(X), symbol(Y)}).
VectorField commutator(const VectorField& X, const VectorField& Y, const PhaseSpace& ps);

/// Graded commutator computed directly from components:
/// [X,Y]^A = X(Y^A) - (-1)^{XY} Y(X^A). Independent of the symbol route.
VectorField commutator_by_components(const VectorField& X, const VectorField& Y);

}  // namespace loday
