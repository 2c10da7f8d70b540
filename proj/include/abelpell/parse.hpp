#ifndef ABELPELL_PARSE_HPP
#define ABELPELL_PARSE_HPP

#include <string>
#include <string_view>

#include "abelpell/unipoly.hpp"

namespace abel {

// Largest exponent the parser accepts.
inline constexpr unsigned max_parse_exponent = 100000;

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | var | '(' expr ')'
// Throws ParseError carrying the 1-based line and column of the offending token.
UniPoly parse_poly(std::string_view text, std::string_view var = "x");

struct PolyExpr {
  std::string source;
  UniPoly poly;
};

PolyExpr parse_expr(std::string_view text, std::string_view var = "x");

}  // namespace abel

#endif  // ABELPELL_PARSE_HPP
