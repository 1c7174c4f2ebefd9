#pragma once

#include "loday/phase_space.hpp"
#include "loday/superpoly.hpp"
#include "loday/vector_field.hpp"

namespace loday {

/// A pair (S, Q) on a cotangent lift: S odd of fiber degree two, Q an odd
/// vector field. The symbol of Q is computed once at construction.
/// Construction checks only parity and degree; validity of the three defining
/// conditions is reported by check_structure.
class OddJacobiStructure {
 public:
  /// Throws StructureError if S is not odd of fiber degree 2 (zero allowed),
  /// or Q is not odd (zero allowed); ChartError on chart mismatch.
  OddJacobiStructure(PhaseSpace ps, SuperPolynomial S, VectorField Q);

  const PhaseSpace& phase_space() const noexcept { return ps_; }
  const ChartPtr& chart() const noexcept { return ps_.base(); }
  const SuperPolynomial& S() const noexcept { return S_; }
  const VectorField& Q() const noexcept { return Q_; }
  /// symbol(Q)
  const SuperPolynomial& Q_symbol() const noexcept { return Q_symbol_; }

 private:
  PhaseSpace ps_;
  SuperPolynomial S_;
  VectorField Q_;
  SuperPolynomial Q_symbol_;
};

struct Residual {
  bool pass = true;
  SuperPolynomial defect;
};

struct StructureReport {
  Residual homological;    // {Qs, Qs}
  Residual invariance;     // {Qs, S}
  Residual compatibility;  // {S, S} + 2 Qs S

  bool valid() const noexcept { return homological.pass && invariance.pass && compatibility.pass; }
};

StructureReport check_structure(const OddJacobiStructure& J);

/// [[f,g]] = (-1)^{f+1} {{S,f},g} - (-1)^{f+1} {Qs, f g}, with f and g pulled
/// back to the cotangent lift. Inputs are split by parity when inhomogeneous.
SuperPolynomial odd_jacobi_bracket(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g);

/// S^{BA} = d/dp_B d/dp_A S (left derivatives), a base function.
SuperPolynomial schouten_coefficient(const OddJacobiStructure& J, std::size_t b, std::size_t a);

/// Coordinate form
///   (-1)^{(B+1) f + 1} S^{BA} d_A f d_B g + (-1)^f Q(f) g + f Q(g).
/// Cross-check for odd_jacobi_bracket.
SuperPolynomial odd_jacobi_bracket_coords(const OddJacobiStructure& J, const SuperPolynomial& f,
                                          const SuperPolynomial& g);

/// X_f(g) = (-1)^f [[f,g]] - Q(f) g, parity f + 1.
/// The components are computed from the bracket and compared against the
/// symbol route -{S,f} + (-1)^f f Qs; a mismatch throws InternalError.
VectorField hamiltonian_X(const OddJacobiStructure& J, const SuperPolynomial& f);

struct JacobiFieldReport {
  bool pass = true;
  SuperPolynomial s_residual;  // {symbol(X), S}
  SuperPolynomial q_residual;  // {symbol(X), Qs}
};

JacobiFieldReport is_jacobi_field(const OddJacobiStructure& J, const VectorField& X);

/// Q(f) on the structure's base chart.
inline SuperPolynomial apply_Q(const OddJacobiStructure& J, const SuperPolynomial& f) { return apply(J.Q(), f); }

/// The constant function 1 on the base chart.
SuperPolynomial unit(const OddJacobiStructure& J);

}  // namespace loday
