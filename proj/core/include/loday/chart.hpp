#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loday/grading.hpp"

namespace loday {

struct CoordinateSpec {
  std::string name;
  Parity parity = Parity::Even;
  Weight weight{};
};

struct Coordinate {
  std::string name;
  Parity parity = Parity::Even;
  Weight weight{};
  std::size_t index = 0;

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// Ordered coordinate declaration. The order of the odd coordinates fixes the
/// sign convention of every normal-form monomial built on this chart.
class Chart {
 public:
  /// Throws ChartError on duplicate or non-identifier names.
  static ChartPtr make(std::vector<CoordinateSpec> specs);

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }
  const Coordinate& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coordinate> coordinates() const noexcept { return coords_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws ChartError when `name` is not declared.
  std::size_t index_of(std::string_view name) const;

  bool is_odd(std::size_t i) const { return coords_[i].parity == Parity::Odd; }
  bool has_odd() const noexcept;
  std::vector<CoordinateSpec> specs() const;

  friend bool operator==(const Chart& a, const Chart& b) { return a.coords_ == b.coords_; }

 private:
  explicit Chart(std::vector<Coordinate> coords) : coords_(std::move(coords)) {}

  std::vector<Coordinate> coords_;
};

bool same_chart(const ChartPtr& a, const ChartPtr& b) noexcept;

/// Throws ChartError unless both pointers denote the same chart.
void require_same_chart(const ChartPtr& a, const ChartPtr& b, std::string_view op);

bool is_identifier(std::string_view s) noexcept;

}  // namespace loday
