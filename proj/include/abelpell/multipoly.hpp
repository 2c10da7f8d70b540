#ifndef ABELPELL_MULTIPOLY_HPP
#define ABELPELL_MULTIPOLY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "abelpell/rational.hpp"

namespace abel {

using Exponents = std::vector<unsigned>;

// Sparse polynomial over the rationals in a fixed ordered list of variables.
// Zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  unsigned degree_in(std::size_t index) const;
  unsigned total_degree() const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned exponent) const;

  // Replace variable `index` by `value` (same variable list).
  MultiPoly substitute(std::size_t index, const MultiPoly& value) const;
  // Coefficient of var^k, as a polynomial with that variable's exponent zeroed.
  MultiPoly coefficient_of(std::size_t index, unsigned k) const;
  // Same polynomial over a longer variable list that starts with this one's.
  MultiPoly extend(const std::vector<std::string>& variables) const;
  // Drop trailing variables that do not occur.
  MultiPoly restrict_to(std::size_t count) const;

  // Terms in descending graded-lexicographic order, e.g. "a_1^2 + 2*a_1*a_2".
  std::string str() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace abel

#endif  // ABELPELL_MULTIPOLY_HPP
