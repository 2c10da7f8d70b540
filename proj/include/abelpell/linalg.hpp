#ifndef ABELPELL_LINALG_HPP
#define ABELPELL_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "abelpell/rational.hpp"
#include "abelpell/unipoly.hpp"

namespace abel {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Ring adaptor for fraction-free elimination: the ring must be an integral
// domain in which divide_exact is exact whenever the quotient exists.
template <class T>
struct RingOps;

template <>
struct RingOps<Rational> {
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational divide_exact(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingOps<UniPoly> {
  static bool is_zero(const UniPoly& a) { return a.is_zero(); }
  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly::constant(1); }
  static UniPoly divide_exact(const UniPoly& a, const UniPoly& b) { return exact_quotient(a, b); }
};

template <>
struct RingOps<mpz_class> {
  static bool is_zero(const mpz_class& a) { return a == 0; }
  static mpz_class zero() { return 0; }
  static mpz_class one() { return 1; }
  static mpz_class divide_exact(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

// Bareiss fraction-free determinant of a square matrix.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  using Ops = RingOps<T>;
  const std::size_t n = m.size();
  if (n == 0) return Ops::one();
  bool negate = false;
  T previous = Ops::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Ops::is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && Ops::is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return Ops::zero();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = Ops::divide_exact(value, previous);
      }
      m[i][k] = Ops::zero();
    }
    previous = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = Ops::zero() - det;
  return det;
}

// Rank by fraction-free elimination after clearing denominators row by row.
std::size_t matrix_rank(const Matrix<Rational>& m);

}  // namespace abel

#endif  // ABELPELL_LINALG_HPP
