#ifndef ABELPELL_LAURENT_HPP
#define ABELPELL_LAURENT_HPP

#include <vector>

#include "abelpell/rational.hpp"
#include "abelpell/unipoly.hpp"

namespace abel {

// Truncated Laurent series in 1/x: c_0 x^d + c_1 x^(d-1) + ... + c_(prec-1) x^(d-prec+1) + O(x^(d-prec)).
// A zero value is stored with no coefficients and only its error order.
class LaurentTail {
 public:
  LaurentTail(int top_degree, std::vector<Rational> descending, int precision);

  // Exact polynomial padded with zeros to the requested number of coefficients.
  static LaurentTail from_poly(const UniPoly& p, int precision);
  // O(x^order), a zero known down to x^order.
  static LaurentTail zero_to(int order);

  bool is_zero() const { return coeffs_.empty(); }
  int top_degree() const;
  int precision() const { return static_cast<int>(coeffs_.size()); }
  // Exponent of the first unknown term.
  int error_order() const { return low_ - 1; }
  // Lowest exponent with a known coefficient.
  int lowest_known() const { return low_; }

  // Coefficient of x^exponent; throws PrecisionExhausted below the known range.
  Rational coeff(int exponent) const;

  LaurentTail operator-() const;
  friend LaurentTail operator+(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator-(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator*(const LaurentTail& a, const LaurentTail& b);

  // Square root with positive leading coefficient; top degree must be even and
  // the leading coefficient a rational square.
  LaurentTail sqrt() const;

  // Terms of nonnegative degree; requires every such coefficient to be known.
  UniPoly polynomial_part() const;

 private:
  LaurentTail() = default;
  void normalize();
  // Invariant: coeffs_ descending from x^(low_ + size - 1) down to x^low_, first entry nonzero.
  std::vector<Rational> coeffs_;
  int low_ = 0;
};

int default_laurent_precision(const UniPoly& R);

// Monic Y of degree g+1 with deg(R - Y^2) <= g, for monic R of degree 2g+2.
UniPoly laurent_sqrt_polypart(const UniPoly& R);

}  // namespace abel

#endif  // ABELPELL_LAURENT_HPP
