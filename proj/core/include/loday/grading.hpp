#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string_view>

namespace loday {

/// Z2 grading.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr int bit(Parity p) noexcept { return static_cast<int>(p); }

constexpr Parity parity_from_bit(int b) noexcept { return (b & 1) ? Parity::Odd : Parity::Even; }

constexpr Parity operator+(Parity a, Parity b) noexcept { return parity_from_bit(bit(a) + bit(b)); }

constexpr Parity operator+(Parity a, int b) noexcept { return parity_from_bit(bit(a) + b); }

/// (-1)^e
constexpr int sgn(int e) noexcept { return (e & 1) ? -1 : 1; }

/// Koszul sign (-1)^{ab} for transposing homogeneous elements of parities a and b.
constexpr int koszul(Parity a, Parity b) noexcept { return sgn(bit(a) * bit(b)); }

constexpr std::string_view to_string(Parity p) noexcept { return p == Parity::Odd ? "odd" : "even"; }

inline std::ostream& operator<<(std::ostream& os, Parity p) { return os << to_string(p); }

/// Auxiliary Z grading, additive under multiplication.
struct Weight {
  int value = 0;

  friend constexpr Weight operator+(Weight a, Weight b) noexcept { return {a.value + b.value}; }
  friend constexpr Weight operator-(Weight a) noexcept { return {-a.value}; }
  friend constexpr Weight operator*(int k, Weight a) noexcept { return {k * a.value}; }
  friend constexpr auto operator<=>(Weight, Weight) = default;
};

inline std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.value; }

}  // namespace loday
