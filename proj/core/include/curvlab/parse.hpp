#pragma once

#include <stdexcept>
#include <string>

#include "curvlab/expr.hpp"
#include "curvlab/symbols.hpp"

namespace curvlab {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
  std::size_t position;  // byte offset into the input
};

/// Parses the expression grammar
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?          (non-associative)
///   primary := number | ident | ident '(' expr ')' | '(' expr ')'
///
/// Numbers are decimal literals converted exactly to rationals. Identifiers
/// resolve against the symbol table; exp/sinh/cosh/sin/cos/sqrt name kernels.
/// '^' binds tighter than unary minus and requires an integer literal
/// exponent (optionally signed).
Expr parse_expr(const std::string& text, const SymbolTable& symbols);

}  // namespace curvlab
