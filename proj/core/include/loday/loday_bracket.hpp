#pragma once

#include "loday/odd_jacobi.hpp"

namespace loday {

/// Derived bracket {f,g} = (-1)^{f+1} [[Q(f), g]]. Even; satisfies the
/// Jacobi-Loday identity and the left Leibniz rule, but is not skewsymmetric
/// in general.
SuperPolynomial loday_bracket(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g);

/// Second-derivative coordinate form
///   (-1)^{B(f+1)+1} ( (-1)^A S^{BA} Q^C d_C d_A f + S^{BA} d_A Q^C d_C f
///                     - Q^B Q^A d_A f ) d_B g.
SuperPolynomial loday_bracket_coords(const OddJacobiStructure& J, const SuperPolynomial& f,
                                     const SuperPolynomial& g);

/// Y_f(g) = {f,g}; parity f.
VectorField hamiltonian_Y(const OddJacobiStructure& J, const SuperPolynomial& f);

/// f * g = (-1)^{f+1} Q(f) g. Associative, odd.
SuperPolynomial derived_product(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g);

/// [f,g]_* = f*g - (-1)^{(f+1)(g+1)} g*f.
SuperPolynomial star_commutator(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g);

/// Odd Jacobi bracket of the pure Q-structure (0, Q): (-1)^f Q(fg).
SuperPolynomial q_bracket(const OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g);

}  // namespace loday
