#include "curvlab/parse.hpp"

#include <cctype>
#include <optional>

namespace curvlab {

SymbolTable::SymbolTable(std::vector<std::string> coordinates,
                         std::vector<std::pair<std::string, Assumption>> parameters)
    : coordinates_(std::move(coordinates)), parameters_(std::move(parameters)) {
  for (const auto& [p, a] : parameters_)
    if (is_coordinate(p))
      throw ExprError("symbol is both coordinate and parameter: " + p);
}

bool SymbolTable::is_coordinate(const std::string& name) const {
  return coordinate_index(name) >= 0;
}

bool SymbolTable::is_parameter(const std::string& name) const {
  for (const auto& [p, a] : parameters_)
    if (p == name) return true;
  return false;
}

Assumption SymbolTable::assumption(const std::string& name) const {
  for (const auto& [p, a] : parameters_)
    if (p == name) return a;
  return Assumption::None;
}

int SymbolTable::coordinate_index(const std::string& name) const {
  for (std::size_t i = 0; i < coordinates_.size(); ++i)
    if (coordinates_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> SymbolTable::all_symbols() const {
  std::vector<std::string> out = coordinates_;
  for (const auto& [p, a] : parameters_) out.push_back(p);
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  const SymbolTable& symbols;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return e;
  }

  Expr expr() {
    Expr e = term();
    while (true) {
      if (eat('+')) e = e + term();
      else if (eat('-')) e = e - term();
      else return e;
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (eat('*')) e = e * unary();
      else if (eat('/')) {
        const std::size_t at = pos;
        Expr d = unary();
        if (d.is_zero()) {
          pos = at;
          fail("division by zero");
        }
        e = e / d;
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (eat('-')) return -unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!eat('^')) return base;
    const int e = integer_literal();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') fail("'^' is non-associative; parenthesize");
    if (e < 0 && base.is_zero()) fail("zero raised to a negative power");
    return base.pow(e);
  }

  int integer_literal() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer exponent");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos;
    }
    if (pos < text.size() && text[pos] == '.') fail("exponent must be an integer literal");
    return static_cast<int>(neg ? -v : v);
  }

  Expr primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      Expr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr number() {
    const std::size_t start = pos;
    Integer int_part = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      int_part = int_part * 10 + (text[pos] - '0');
      ++pos;
    }
    Rational value(int_part);
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      Integer frac = 0, scale = 1;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        frac = frac * 10 + (text[pos] - '0');
        scale *= 10;
        ++pos;
      }
      if (scale == 1 && pos == start + 1) fail("malformed number");
      value += Rational(frac, scale);
    }
    if (pos == start) fail("malformed number");
    return Expr(value);
  }

  static std::optional<Kernel> kernel_by_name(const std::string& name) {
    if (name == "exp") return Kernel::Exp;
    if (name == "sinh") return Kernel::Sinh;
    if (name == "cosh") return Kernel::Cosh;
    if (name == "sin") return Kernel::Sin;
    if (name == "cos") return Kernel::Cos;
    if (name == "sqrt") return Kernel::Sqrt;
    return std::nullopt;
  }

  Expr identifier() {
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    const std::string name = text.substr(start, pos - start);
    if (auto k = kernel_by_name(name)) {
      if (!eat('(')) fail("expected '(' after " + name);
      Expr arg = expr();
      if (!eat(')')) fail("expected ')'");
      return Expr::kernel(*k, arg);
    }
    if (!symbols.is_registered(name)) {
      pos = start;
      fail("unknown identifier '" + name + "'");
    }
    return Expr::symbol(name);
  }
};

}  // namespace

Expr parse_expr(const std::string& text, const SymbolTable& symbols) {
  Parser p{text, symbols};
  return p.parse();
}

}  // namespace curvlab
