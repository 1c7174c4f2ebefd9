#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "loday/chart.hpp"
#include "loday/grading.hpp"
#include "loday/rational.hpp"

namespace loday {

/// Dense exponent vector over a chart. Odd coordinates carry exponent 0 or 1;
/// the product of the odd factors is read in chart order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  std::uint32_t degree() const noexcept;
  Parity parity(const Chart& chart) const;
  Weight weight(const Chart& chart) const;
  /// Indices of the odd coordinates present, increasing.
  std::vector<std::size_t> odd_set(const Chart& chart) const;
  /// False when an odd coordinate appears squared.
  bool valid_for(const Chart& chart) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic: lower total degree first, then larger leading
  /// exponents first.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
};

/// Normal-form polynomial with exact rational coefficients on a graded chart.
/// No zero coefficients are stored, so equality is equality of term maps.
class SuperPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit SuperPolynomial(ChartPtr chart);

  static SuperPolynomial constant(ChartPtr chart, const Rational& c);
  static SuperPolynomial coordinate(ChartPtr chart, std::size_t index);
  static SuperPolynomial coordinate(ChartPtr chart, std::string_view name);
  /// Drops zero coefficients. Throws ChartError for size mismatch or odd squares.
  static SuperPolynomial from_terms(ChartPtr chart, Terms terms);

  const ChartPtr& chart() const noexcept { return chart_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Largest total degree; 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  Rational coefficient(const Monomial& m) const;

  SuperPolynomial& operator+=(const SuperPolynomial& g);
  SuperPolynomial& operator-=(const SuperPolynomial& g);
  SuperPolynomial& operator*=(const Rational& c);

  friend SuperPolynomial operator+(SuperPolynomial f, const SuperPolynomial& g) { return f += g; }
  friend SuperPolynomial operator-(SuperPolynomial f, const SuperPolynomial& g) { return f -= g; }
  friend SuperPolynomial operator*(const Rational& c, SuperPolynomial f) { return f *= c; }
  friend SuperPolynomial operator*(int c, SuperPolynomial f) { return f *= Rational(c); }
  friend SuperPolynomial operator-(SuperPolynomial f) { return f *= Rational(-1); }
  friend SuperPolynomial operator*(const SuperPolynomial& f, const SuperPolynomial& g);

  friend bool operator==(const SuperPolynomial& f, const SuperPolynomial& g);

  /// Accumulates c*m, keeping the normal form. `m` must fit the chart.
  void add_term(const Monomial& m, const Rational& c);

 private:
  ChartPtr chart_;
  Terms terms_;
};

/// Common grading of all terms; nullopt means Mixed.
struct GradeInfo {
  std::optional<Parity> parity;
  std::optional<Weight> weight;
};

struct ParitySplit {
  SuperPolynomial even;
  SuperPolynomial odd;
};

/// Sum of c_i * p_i. Throws ChartError when charts differ or lengths mismatch.
SuperPolynomial linear_combine(std::span<const Rational> coeffs, std::span<const SuperPolynomial> polys);

/// Supercommutative product with Koszul signs from sorting odd factors.
SuperPolynomial mul(const SuperPolynomial& f, const SuperPolynomial& g);

/// Left derivative. For an odd coordinate the sign is (-1)^(number of odd
/// factors to its left in the normal-form monomial).
SuperPolynomial left_partial(const SuperPolynomial& f, std::size_t index);
SuperPolynomial left_partial(const SuperPolynomial& f, const Coordinate& c);

/// The zero polynomial reports (Even, 0).
GradeInfo grade_info(const SuperPolynomial& f);

/// Throws StructureError for inhomogeneous input; zero is Even.
Parity parity_of(const SuperPolynomial& f);

ParitySplit split_parity(const SuperPolynomial& f);

/// Copies `f` onto `target`, sending coordinate i of f's chart to index_map[i].
/// The relative order of odd coordinates must be preserved by the map.
SuperPolynomial reembed(const SuperPolynomial& f, ChartPtr target, std::span<const std::size_t> index_map);

}  // namespace loday
