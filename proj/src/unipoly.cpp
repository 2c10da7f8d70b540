#include "abelpell/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "abelpell/errors.hpp"
#include "abelpell/linalg.hpp"

namespace abel {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UniPoly::lead() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::substitute_power(unsigned m) const {
  if (m == 0) throw InvalidInput("substitution x -> x^0");
  if (is_zero()) return *this;
  std::vector<Rational> out(static_cast<std::size_t>(degree()) * m + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * m] = coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::affine_substitute(const Rational& a, const Rational& b) const {
  return compose(UniPoly{b, a});
}

UniPoly UniPoly::shift_down(unsigned k) const {
  for (unsigned i = 0; i < k && i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) throw InvalidInput("polynomial not divisible by x^" + std::to_string(k));
  }
  if (k >= coeffs_.size()) return UniPoly();
  return UniPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

std::string UniPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto c = a.coeff(i) <=> b.coeff(i);
    if (c != 0) return c < 0;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Rational inv_lead = b.lead().inverse();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Rational factor = top * inv_lead;
    q[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(i - db + j)] -= factor * b.coeff(j);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly quo(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }
UniPoly rem(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& a) { return rem(a, d).is_zero(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UniPoly(), UniPoly(), UniPoly()};
  Rational inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  UniPoly f = p.monic();
  UniPoly df = f.derivative();
  UniPoly a = gcd(f, df);
  UniPoly b = exact_quotient(f, a);
  UniPoly c = exact_quotient(df, a);
  UniPoly d = c - b.derivative();
  int multiplicity = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, multiplicity});
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++multiplicity;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  return exact_quotient(p.monic(), gcd(p, p.derivative()));
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant with a zero polynomial");
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0 && n == 0) return Rational(1);
  if (m == 0) return p.lead().pow(static_cast<unsigned>(n));
  if (n == 0) return q.lead().pow(static_cast<unsigned>(m));
  const std::size_t size = static_cast<std::size_t>(m + n);
  Matrix<Rational> sylvester(size, std::vector<Rational>(size));
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j <= m; ++j) sylvester[row][row + j] = p.coeff(m - j);
  }
  for (int row = 0; row < m; ++row) {
    for (int j = 0; j <= n; ++j) sylvester[n + row][row + j] = q.coeff(n - j);
  }
  return bareiss_determinant(std::move(sylvester));
}

mpz_class common_denominator(const UniPoly& p) {
  mpz_class acc = 1;
  for (const auto& c : p.coefficients()) acc = lcm_denominator(c, acc);
  return acc;
}

std::size_t matrix_rank(const Matrix<Rational>& input) {
  if (input.empty()) return 0;
  const std::size_t cols = input.front().size();
  Matrix<mpz_class> m;
  m.reserve(input.size());
  for (const auto& row : input) {
    mpz_class den = 1;
    for (const auto& c : row) den = lcm_denominator(c, den);
    std::vector<mpz_class> r;
    r.reserve(cols);
    for (const auto& c : row) r.emplace_back(c.numerator() * (den / c.denominator()));
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
        m[i][j] = RingOps<mpz_class>::divide_exact(v, previous);
      }
      m[i][col] = 0;
    }
    previous = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace abel
