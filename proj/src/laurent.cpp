#include "abelpell/laurent.hpp"

#include <algorithm>

#include "abelpell/errors.hpp"

namespace abel {

LaurentTail::LaurentTail(int top_degree, std::vector<Rational> descending, int precision) {
  if (precision < 0 || static_cast<int>(descending.size()) != precision) {
    throw InvalidInput("Laurent tail precision must match the coefficient count");
  }
  coeffs_ = std::move(descending);
  low_ = top_degree - precision + 1;
  normalize();
}

LaurentTail LaurentTail::from_poly(const UniPoly& p, int precision) {
  if (precision <= 0) throw InvalidInput("Laurent precision must be positive");
  if (p.is_zero()) return zero_to(-precision);
  std::vector<Rational> c(static_cast<std::size_t>(precision));
  for (int i = 0; i < precision; ++i) c[static_cast<std::size_t>(i)] = p.coeff(p.degree() - i);
  return LaurentTail(p.degree(), std::move(c), precision);
}

LaurentTail LaurentTail::zero_to(int order) {
  LaurentTail z;
  z.low_ = order + 1;
  return z;
}

void LaurentTail::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
  coeffs_.erase(coeffs_.begin(), first);
}

int LaurentTail::top_degree() const {
  if (is_zero()) throw InvalidInput("top degree of a zero Laurent tail");
  return low_ + precision() - 1;
}

Rational LaurentTail::coeff(int exponent) const {
  if (exponent < low_) {
    throw PrecisionExhausted("coefficient of x^" + std::to_string(exponent) + " is beyond the known precision (lowest known x^" +
                             std::to_string(low_) + ")");
  }
  int top = low_ + precision() - 1;
  if (exponent > top) return Rational(0);
  return coeffs_[static_cast<std::size_t>(top - exponent)];
}

LaurentTail LaurentTail::operator-() const {
  LaurentTail r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

LaurentTail combine(const LaurentTail& a, const LaurentTail& b, bool subtract) {
  int low = std::max(a.lowest_known(), b.lowest_known());
  int top = low - 1;
  if (!a.is_zero()) top = std::max(top, a.top_degree());
  if (!b.is_zero()) top = std::max(top, b.top_degree());
  if (top < low) return LaurentTail::zero_to(low - 1);
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(top - low + 1));
  for (int e = top; e >= low; --e) {
    Rational x = a.coeff(e);
    Rational y = b.coeff(e);
    c.push_back(subtract ? x - y : x + y);
  }
  int prec = static_cast<int>(c.size());
  return LaurentTail(top, std::move(c), prec);
}

}  // namespace

LaurentTail operator+(const LaurentTail& a, const LaurentTail& b) { return combine(a, b, false); }
LaurentTail operator-(const LaurentTail& a, const LaurentTail& b) { return combine(a, b, true); }

LaurentTail operator*(const LaurentTail& a, const LaurentTail& b) {
  if (a.is_zero() && b.is_zero()) return LaurentTail::zero_to(a.error_order() + b.error_order());
  if (a.is_zero()) return LaurentTail::zero_to(a.error_order() + b.top_degree());
  if (b.is_zero()) return LaurentTail::zero_to(b.error_order() + a.top_degree());
  const int prec = std::min(a.precision(), b.precision());
  std::vector<Rational> c(static_cast<std::size_t>(prec));
  for (int k = 0; k < prec; ++k) {
    Rational acc;
    for (int i = 0; i <= k; ++i) {
      acc += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(k - i)];
    }
    c[static_cast<std::size_t>(k)] = acc;
  }
  return LaurentTail(a.top_degree() + b.top_degree(), std::move(c), prec);
}

LaurentTail LaurentTail::sqrt() const {
  if (is_zero()) throw InvalidInput("square root of a zero Laurent tail");
  const int top = top_degree();
  if (top % 2 != 0) throw InvalidInput("square root of a Laurent tail of odd degree");
  auto lead_root = coeffs_.front().sqrt();
  if (!lead_root) throw InvalidInput("leading coefficient " + coeffs_.front().str() + " is not a rational square");
  const int prec = precision();
  std::vector<Rational> y(static_cast<std::size_t>(prec));
  y[0] = *lead_root;
  const Rational inv_two_lead = (Rational(2) * y[0]).inverse();
  for (int k = 1; k < prec; ++k) {
    Rational acc = coeffs_[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) acc -= y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)];
    y[static_cast<std::size_t>(k)] = acc * inv_two_lead;
  }
  return LaurentTail(top / 2, std::move(y), prec);
}

UniPoly LaurentTail::polynomial_part() const {
  if (low_ > 0) {
    throw PrecisionExhausted("polynomial part needs coefficients down to x^0, known only to x^" + std::to_string(low_));
  }
  if (is_zero()) return UniPoly();
  int top = top_degree();
  if (top < 0) return UniPoly();
  std::vector<Rational> c(static_cast<std::size_t>(top + 1));
  for (int e = 0; e <= top; ++e) c[static_cast<std::size_t>(e)] = coeff(e);
  return UniPoly(std::move(c));
}

int default_laurent_precision(const UniPoly& R) { return 2 * std::max(R.degree(), 0) + 4; }

UniPoly laurent_sqrt_polypart(const UniPoly& R) {
  if (R.is_zero() || R.degree() % 2 != 0) throw InvalidInput("square root seed needs an even-degree polynomial");
  if (!R.is_monic()) throw InvalidInput("square root seed needs a monic polynomial");
  LaurentTail root = LaurentTail::from_poly(R, default_laurent_precision(R)).sqrt();
  UniPoly y = root.polynomial_part();
  const int g = R.degree() / 2 - 1;
  if (y.degree() != g + 1 || !y.is_monic() || (R - y * y).degree() > g) {
    throw std::logic_error("square root polynomial part failed its defining bound");
  }
  return y;
}

}  // namespace abel
