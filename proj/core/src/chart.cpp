#include "loday/chart.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "loday/errors.hpp"

namespace loday {

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  return ident_start(s.front()) && std::all_of(s.begin() + 1, s.end(), ident_char);
}

ChartPtr Chart::make(std::vector<CoordinateSpec> specs) {
  std::vector<Coordinate> coords;
  coords.reserve(specs.size());
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto& s = specs[i];
    if (!is_identifier(s.name)) throw ChartError("coordinate name '" + s.name + "' is not an identifier");
    if (!seen.insert(s.name).second) throw ChartError("duplicate coordinate name '" + s.name + "'");
    coords.push_back(Coordinate{std::move(s.name), s.parity, s.weight, i});
  }
  return ChartPtr(new Chart(std::move(coords)));
}

std::optional<std::size_t> Chart::find(std::string_view name) const {
  for (const auto& c : coords_)
    if (c.name == name) return c.index;
  return std::nullopt;
}

std::size_t Chart::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ChartError("unknown coordinate '" + std::string(name) + "'");
}

bool Chart::has_odd() const noexcept {
  return std::any_of(coords_.begin(), coords_.end(), [](const Coordinate& c) { return c.parity == Parity::Odd; });
}

std::vector<CoordinateSpec> Chart::specs() const {
  std::vector<CoordinateSpec> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back({c.name, c.parity, c.weight});
  return out;
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b, std::string_view op) {
  if (!same_chart(a, b)) throw ChartError(std::string(op) + ": operands live on different charts");
}

}  // namespace loday
