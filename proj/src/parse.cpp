#include "abelpell/parse.hpp"

#include <cctype>

#include "abelpell/errors.hpp"

namespace abel {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view var) : text_(text), var_(var) {
    if (var_.empty() || !std::isalpha(static_cast<unsigned char>(var_.front()))) {
      throw InvalidInput("variable name must start with a letter");
    }
    for (char ch : var_) {
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') throw InvalidInput("variable name must be alphanumeric");
    }
  }

  UniPoly run() {
    skip_space();
    if (at_end()) fail("empty expression");
    UniPoly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  UniPoly expr() {
    UniPoly acc = term();
    for (;;) {
      skip_space();
      char op = peek();
      if (op != '+' && op != '-') return acc;
      advance();
      UniPoly rhs = term();
      if (op == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
  }

  UniPoly term() {
    UniPoly acc = unary();
    for (;;) {
      skip_space();
      if (peek() == '/') fail("division is only allowed inside a rational literal");
      if (peek() != '*') return acc;
      advance();
      acc *= unary();
    }
  }

  UniPoly unary() {
    skip_space();
    if (peek() == '-') {
      advance();
      return -unary();
    }
    if (peek() == '+') {
      advance();
      return unary();
    }
    return power();
  }

  UniPoly power() {
    UniPoly base = primary();
    skip_space();
    if (peek() != '^') return base;
    advance();
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
    std::size_t line = line_, column = column_;
    std::string digits = read_digits();
    if (digits.size() > 6 || std::stoul(digits) > max_parse_exponent) {
      throw ParseError("exponent exceeds " + std::to_string(max_parse_exponent), line, column);
    }
    skip_space();
    if (peek() == '^') fail("chained exponents need parentheses");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  std::string read_digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  UniPoly primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char ch = peek();
    if (ch == '(') {
      advance();
      UniPoly inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = read_digits();
      if (peek() == '/') {
        advance();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        std::size_t line = line_, column = column_;
        std::string den = read_digits();
        if (mpz_class(den) == 0) throw ParseError("zero denominator", line, column);
        return UniPoly::constant(Rational(mpz_class(num), mpz_class(den)));
      }
      return UniPoly::constant(Rational(mpz_class(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t line = line_, column = column_;
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        name += peek();
        advance();
      }
      if (name != var_) throw ParseError("unknown identifier '" + name + "'", line, column);
      return UniPoly::x();
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

UniPoly parse_poly(std::string_view text, std::string_view var) { return Parser(text, var).run(); }

PolyExpr parse_expr(std::string_view text, std::string_view var) {
  return PolyExpr{std::string(text), parse_poly(text, var)};
}

}  // namespace abel
