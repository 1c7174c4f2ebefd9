#include "loday/expression.hpp"

#include <cctype>
#include <sstream>

#include "loday/errors.hpp"

namespace loday {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Chart& chart) : src_(src), chart_(chart) {}

  Expr parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    auto e = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  Expr expr() {
    auto first = term();
    skip_ws();
    if (at_end() || (peek() != '+' && peek() != '-')) return first;
    Expr sum{.kind = Expr::Kind::Sum, .pos = first.pos};
    sum.children.push_back(std::move(first));
    sum.signs.push_back(1);
    while (true) {
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      const int s = get() == '+' ? 1 : -1;
      sum.children.push_back(term());
      sum.signs.push_back(s);
    }
    return sum;
  }

  Expr term() {
    auto first = factor();
    skip_ws();
    if (at_end() || peek() != '*') return first;
    Expr prod{.kind = Expr::Kind::Product, .pos = first.pos};
    prod.children.push_back(std::move(first));
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
      prod.children.push_back(factor());
    }
    return prod;
  }

  Expr factor() {
    auto b = base();
    skip_ws();
    if (at_end() || peek() != '^') return b;
    const auto pos = here();
    get();
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
    const auto digits = integer();
    unsigned long n = 0;
    try {
      n = std::stoul(digits);
    } catch (const std::exception&) {
      fail("exponent too large", pos);
    }
    if (n > 1000) fail("exponent too large", pos);
    Expr p{.kind = Expr::Kind::Power, .pos = pos, .exponent = static_cast<unsigned>(n)};
    p.children.push_back(std::move(b));
    return p;
  }

  Expr base() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const auto pos = here();
    const char c = peek();
    if (c == '(') {
      get();
      auto e = expr();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      get();
      return e;
    }
    if (c == '-') {
      get();
      Expr n{.kind = Expr::Kind::Negation, .pos = pos};
      n.children.push_back(factor());
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto text = integer();
      skip_ws();
      if (!at_end() && peek() == '/') {
        get();
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        const auto den_pos = here();
        const auto den = integer();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator", den_pos);
        text += "/" + den;
      }
      Rational v(text);
      v.canonicalize();
      return Expr{.kind = Expr::Kind::Literal, .pos = pos, .value = v};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += get();
      const auto idx = chart_.find(name);
      if (!idx) throw ParseError(ParseError::Kind::UnknownIdentifier, pos.line, pos.column, "unknown identifier '" + name + "'");
      return Expr{.kind = Expr::Kind::Coordinate, .pos = pos, .index = *idx, .name = name};
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string integer() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    return s;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }
  bool at_end() const { return i_ >= src_.size(); }
  char peek() const { return src_[i_]; }
  char get() {
    const char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  SourcePos here() const { return {line_, col_}; }

  [[noreturn]] void fail(const std::string& what) { fail(what, here()); }
  [[noreturn]] void fail(const std::string& what, SourcePos p) {
    throw ParseError(ParseError::Kind::Syntax, p.line, p.column, what);
  }

  std::string_view src_;
  const Chart& chart_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

Expr parse_expr(std::string_view src, const Chart& chart) { return Parser(src, chart).parse(); }

SuperPolynomial elaborate(const Expr& e, ChartPtr chart) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return SuperPolynomial::constant(chart, e.value);
    case Expr::Kind::Coordinate:
      return SuperPolynomial::coordinate(chart, e.index);
    case Expr::Kind::Negation:
      return -elaborate(e.children.at(0), chart);
    case Expr::Kind::Sum: {
      SuperPolynomial out(chart);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (e.signs[i] > 0)
          out += elaborate(e.children[i], chart);
        else
          out -= elaborate(e.children[i], chart);
      }
      return out;
    }
    case Expr::Kind::Product: {
      auto out = elaborate(e.children.at(0), chart);
      for (std::size_t i = 1; i < e.children.size(); ++i) out = out * elaborate(e.children[i], chart);
      return out;
    }
    case Expr::Kind::Power: {
      const auto b = elaborate(e.children.at(0), chart);
      const auto p = grade_info(b).parity;
      if (!p || *p != Parity::Even)
        throw ParseError(ParseError::Kind::OddPower, e.pos.line, e.pos.column,
                         "power of an expression that is not even");
      auto out = SuperPolynomial::constant(chart, Rational(1));
      for (unsigned k = 0; k < e.exponent; ++k) out = out * b;
      return out;
    }
  }
  throw InternalError("elaborate: unknown node");
}

SuperPolynomial parse_polynomial(std::string_view src, ChartPtr chart) {
  if (!chart) throw ChartError("parse_polynomial requires a chart");
  return elaborate(parse_expr(src, *chart), chart);
}

std::string print_expr(const SuperPolynomial& f) {
  if (f.is_zero()) return "0";
  const auto& chart = *f.chart();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    os << to_string(Rational(abs(c)));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << " * " << chart[i].name;
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

}  // namespace loday
