#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "loday/odd_jacobi.hpp"
#include "loday/superpoly.hpp"
#include "loday/vector_field.hpp"

// Reference implementations used as test oracles. They work on words of
// coordinate indices and share no code with the library beyond the
// SuperPolynomial container used for input and output.
namespace oracle {

using loday::ChartPtr;
using loday::Parity;
using loday::PhaseSpace;
using loday::Rational;
using loday::SuperPolynomial;

struct WordTerm {
  Rational coeff;
  std::vector<std::size_t> word;
};

std::vector<WordTerm> words(const SuperPolynomial& f);
/// Sorts each word into chart order by adjacent swaps, flipping the sign for
/// every odd-odd swap; words with a repeated odd letter vanish.
SuperPolynomial from_words(const ChartPtr& chart, const std::vector<WordTerm>& terms);

SuperPolynomial mul(const SuperPolynomial& f, const SuperPolynomial& g);
/// Left derivative by deleting each occurrence of the letter, with sign
/// (-1)^{i * (parity of the letters before it)}.
SuperPolynomial partial(const SuperPolynomial& f, std::size_t i);
Parity parity(const SuperPolynomial& f);

SuperPolynomial poisson(const PhaseSpace& ps, const SuperPolynomial& F, const SuperPolynomial& G);
SuperPolynomial apply(const loday::VectorField& X, const SuperPolynomial& f);
SuperPolynomial odd_bracket(const loday::OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g);
SuperPolynomial loday(const loday::OddJacobiStructure& J, const SuperPolynomial& f, const SuperPolynomial& g);

/// Random polynomial of the given parity with up to `terms` terms of degree
/// at most `degree`; draws use std distributions (test-only).
SuperPolynomial random(const ChartPtr& chart, std::mt19937_64& rng, Parity p, unsigned degree = 3, unsigned terms = 4);
/// Random polynomial of either parity, sometimes inhomogeneous.
SuperPolynomial random_any(const ChartPtr& chart, std::mt19937_64& rng, unsigned degree = 3, unsigned terms = 4);

}  // namespace oracle
