#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "loday/chart.hpp"
#include "loday/superpoly.hpp"

namespace loday {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Expression tree produced by parse_expr. Sum children carry a sign each.
struct Expr {
  enum class Kind { Literal, Coordinate, Negation, Sum, Product, Power };

  Kind kind = Kind::Literal;
  SourcePos pos{};
  Rational value{};          // Literal
  std::size_t index = 0;     // Coordinate
  std::string name;          // Coordinate
  unsigned exponent = 0;     // Power
  std::vector<Expr> children;
  std::vector<int> signs;    // Sum
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' INT)?
///   base   := INT ('/' INT)? | IDENT | '(' expr ')' | '-' factor
/// Identifiers are resolved against the chart; unknown names are a ParseError.
Expr parse_expr(std::string_view src, const Chart& chart);

/// Throws ParseError(OddPower) when a power is applied to anything that is
/// not even.
SuperPolynomial elaborate(const Expr& e, ChartPtr chart);

/// parse_expr followed by elaborate.
SuperPolynomial parse_polynomial(std::string_view src, ChartPtr chart);

/// Canonical text: terms in monomial order, coefficient always written,
/// factors in chart order, e.g. "-1 * theta1 * theta2 + 3/2 * x^2".
std::string print_expr(const SuperPolynomial& f);

}  // namespace loday
