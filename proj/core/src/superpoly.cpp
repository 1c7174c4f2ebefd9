#include "loday/superpoly.hpp"

#include <algorithm>
#include <numeric>

#include "loday/errors.hpp"

namespace loday {

// ---------------------------------------------------------------------------
// Monomial

std::uint32_t Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

Parity Monomial::parity(const Chart& chart) const {
  int odd = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (chart.is_odd(i)) odd += static_cast<int>(exps_[i]);
  return parity_from_bit(odd);
}

Weight Monomial::weight(const Chart& chart) const {
  Weight w{};
  for (std::size_t i = 0; i < exps_.size(); ++i) w = w + static_cast<int>(exps_[i]) * chart[i].weight;
  return w;
}

std::vector<std::size_t> Monomial::odd_set(const Chart& chart) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (chart.is_odd(i) && exps_[i] != 0) out.push_back(i);
  return out;
}

bool Monomial::valid_for(const Chart& chart) const {
  if (exps_.size() != chart.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (chart.is_odd(i) && exps_[i] > 1) return false;
  return true;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  // Same degree: x^2 < x*y < y^2 in printing order.
  return std::lexicographical_compare(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end(),
                                      [](std::uint32_t l, std::uint32_t r) { return l > r; });
}

// ---------------------------------------------------------------------------
// SuperPolynomial

SuperPolynomial::SuperPolynomial(ChartPtr chart) : chart_(std::move(chart)) {
  if (!chart_) throw ChartError("polynomial requires a chart");
}

SuperPolynomial SuperPolynomial::constant(ChartPtr chart, const Rational& c) {
  SuperPolynomial f(std::move(chart));
  f.add_term(Monomial(f.chart_->size()), c);
  return f;
}

SuperPolynomial SuperPolynomial::coordinate(ChartPtr chart, std::size_t index) {
  if (!chart || index >= chart->size()) throw ChartError("coordinate index out of range");
  SuperPolynomial f(std::move(chart));
  Monomial m(f.chart_->size());
  m[index] = 1;
  f.add_term(m, Rational(1));
  return f;
}

SuperPolynomial SuperPolynomial::coordinate(ChartPtr chart, std::string_view name) {
  const auto i = chart->index_of(name);
  return coordinate(std::move(chart), i);
}

SuperPolynomial SuperPolynomial::from_terms(ChartPtr chart, Terms terms) {
  SuperPolynomial f(std::move(chart));
  for (auto& [m, c] : terms) {
    if (!m.valid_for(*f.chart_)) throw ChartError("monomial does not fit the chart (size or odd square)");
    f.add_term(m, c);
  }
  return f;
}

std::uint32_t SuperPolynomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::add_term(const Monomial& m, const Rational& c) {
  // GMP arithmetic assumes reduced operands; a caller may pass mpq_class(2, 4).
  Rational v(c);
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, std::move(v));
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& g) {
  require_same_chart(chart_, g.chart_, "add");
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& g) {
  require_same_chart(chart_, g.chart_, "subtract");
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
  Rational r(c);
  r.canonicalize();
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= r;
  return *this;
}

bool operator==(const SuperPolynomial& f, const SuperPolynomial& g) {
  return same_chart(f.chart_, g.chart_) && f.terms_ == g.terms_;
}

namespace {

// Product of two normal-form monomials; returns the sign of the reordering, or
// 0 if an odd coordinate would appear twice.
int multiply_monomials(const Chart& chart, const Monomial& a, const Monomial& b, Monomial& out) {
  const auto n = chart.size();
  out = Monomial(n);
  int swaps = 0;
  int odd_in_b_before = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (chart.is_odd(i)) {
      if (a[i] && b[i]) return 0;
      // every odd factor of a at position i passes the odd factors of b left of i
      if (a[i]) swaps += odd_in_b_before;
      if (b[i]) ++odd_in_b_before;
    }
    out[i] = a[i] + b[i];
  }
  return sgn(swaps);
}

}  // namespace

SuperPolynomial operator*(const SuperPolynomial& f, const SuperPolynomial& g) { return mul(f, g); }

SuperPolynomial mul(const SuperPolynomial& f, const SuperPolynomial& g) {
  require_same_chart(f.chart(), g.chart(), "mul");
  SuperPolynomial out(f.chart());
  Monomial m;
  for (const auto& [ma, ca] : f.terms()) {
    for (const auto& [mb, cb] : g.terms()) {
      const int s = multiply_monomials(*f.chart(), ma, mb, m);
      if (s == 0) continue;
      out.add_term(m, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  }
  return out;
}

SuperPolynomial linear_combine(std::span<const Rational> coeffs, std::span<const SuperPolynomial> polys) {
  if (coeffs.size() != polys.size()) throw ChartError("linear_combine: coefficient and polynomial counts differ");
  if (polys.empty()) throw ChartError("linear_combine: no polynomials (chart unknown)");
  SuperPolynomial out(polys.front().chart());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    require_same_chart(out.chart(), polys[i].chart(), "linear_combine");
    for (const auto& [m, c] : polys[i].terms()) out.add_term(m, coeffs[i] * c);
  }
  return out;
}

SuperPolynomial left_partial(const SuperPolynomial& f, std::size_t index) {
  const Chart& chart = *f.chart();
  if (index >= chart.size()) throw ChartError("left_partial: coordinate index out of range");
  SuperPolynomial out(f.chart());
  const bool odd = chart.is_odd(index);
  for (const auto& [m, c] : f.terms()) {
    if (m[index] == 0) continue;
    Monomial d = m;
    d[index] -= 1;
    if (odd) {
      int before = 0;
      for (std::size_t j = 0; j < index; ++j)
        if (chart.is_odd(j)) before += static_cast<int>(m[j]);
      out.add_term(d, sgn(before) > 0 ? c : Rational(-c));
    } else {
      out.add_term(d, c * m[index]);
    }
  }
  return out;
}

SuperPolynomial left_partial(const SuperPolynomial& f, const Coordinate& c) {
  const Chart& chart = *f.chart();
  if (c.index >= chart.size() || !(chart[c.index] == c))
    throw ChartError("left_partial: coordinate '" + c.name + "' is not in the chart");
  return left_partial(f, c.index);
}

GradeInfo grade_info(const SuperPolynomial& f) {
  if (f.is_zero()) return {Parity::Even, Weight{0}};
  GradeInfo info;
  bool first = true;
  bool parity_mixed = false;
  bool weight_mixed = false;
  for (const auto& [m, c] : f.terms()) {
    const auto p = m.parity(*f.chart());
    const auto w = m.weight(*f.chart());
    if (first) {
      info.parity = p;
      info.weight = w;
      first = false;
      continue;
    }
    if (!parity_mixed && info.parity != p) parity_mixed = true;
    if (!weight_mixed && info.weight != w) weight_mixed = true;
  }
  if (parity_mixed) info.parity.reset();
  if (weight_mixed) info.weight.reset();
  return info;
}

Parity parity_of(const SuperPolynomial& f) {
  const auto info = grade_info(f);
  if (!info.parity) throw StructureError("operation requires a parity-homogeneous polynomial");
  return *info.parity;
}

ParitySplit split_parity(const SuperPolynomial& f) {
  ParitySplit out{SuperPolynomial(f.chart()), SuperPolynomial(f.chart())};
  for (const auto& [m, c] : f.terms()) {
    auto& part = m.parity(*f.chart()) == Parity::Odd ? out.odd : out.even;
    part.add_term(m, c);
  }
  return out;
}

SuperPolynomial reembed(const SuperPolynomial& f, ChartPtr target, std::span<const std::size_t> index_map) {
  const Chart& src = *f.chart();
  if (index_map.size() != src.size()) throw ChartError("reembed: index map has the wrong length");
  std::size_t last_odd = 0;
  bool seen_odd = false;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto j = index_map[i];
    if (j >= target->size()) throw ChartError("reembed: index out of range");
    if ((*target)[j].parity != src[i].parity) throw ChartError("reembed: parity of '" + src[i].name + "' changes");
    if (src.is_odd(i)) {
      if (seen_odd && j <= last_odd) throw ChartError("reembed: odd coordinate order is not preserved");
      last_odd = j;
      seen_odd = true;
    }
  }
  SuperPolynomial out(std::move(target));
  for (const auto& [m, c] : f.terms()) {
    Monomial e(out.chart()->size());
    for (std::size_t i = 0; i < src.size(); ++i) e[index_map[i]] += m[i];
    out.add_term(e, c);
  }
  return out;
}

}  // namespace loday
