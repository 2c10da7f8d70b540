#ifndef ABELPELL_UNIPOLY_HPP
#define ABELPELL_UNIPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelpell/rational.hpp"

namespace abel {

// Dense univariate polynomial over the rationals. Coefficient i multiplies x^i;
// the stored vector never ends in a zero, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, unsigned degree);
  static UniPoly x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && lead().is_one(); }
  // Next-to-highest coefficient vanishes.
  bool is_normalised() const { return degree() < 1 || coeff(degree() - 1).is_zero(); }

  const Rational& lead() const;
  Rational coeff(int i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  Rational eval(const Rational& at) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned exponent) const;
  // p(q(x)).
  UniPoly compose(const UniPoly& inner) const;
  // p(x^m).
  UniPoly substitute_power(unsigned m) const;
  // p(a x + b).
  UniPoly affine_substitute(const Rational& a, const Rational& b) const;
  // Exact division by x^k; the low coefficients must vanish.
  UniPoly shift_down(unsigned k) const;

  // Descending-order printable form, e.g. "2*x^4 + 1".
  std::string str(std::string_view var = "x") const;

  // Lexicographic by degree then coefficients from the top, for deterministic output.
  friend bool operator<(const UniPoly& a, const UniPoly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly quo(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
// Quotient that must be exact; throws std::logic_error otherwise.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);

// Monic gcd, zero only when both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;    // s*a + t*b = gcd
  UniPoly t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree
  int multiplicity;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

// Yun decomposition: p = lead(p) * prod factor^multiplicity, multiplicities strictly increasing.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

// Sylvester determinant with coefficient rows in descending powers, so that
// resultant(p, q) = lead(p)^deg(q) * prod over roots a of p of q(a).
Rational resultant(const UniPoly& p, const UniPoly& q);

// Integer content and primitive representative helpers.
mpz_class common_denominator(const UniPoly& p);

}  // namespace abel

#endif  // ABELPELL_UNIPOLY_HPP
