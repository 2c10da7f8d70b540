#include "abelpell/rational.hpp"

#include <cctype>
#include <functional>

#include "abelpell/errors.hpp"

namespace abel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<mpz_class> integer_root(const mpz_class& value, unsigned k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), value.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

std::optional<Rational> Rational::root(unsigned k) const {
  if (k == 0) return std::nullopt;
  if (k == 1) return *this;
  mpz_class num = value_.get_num();
  bool negative = num < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  if (negative) num = -num;
  auto rn = integer_root(num, k);
  auto rd = integer_root(value_.get_den(), k);
  if (!rn || !rd) return std::nullopt;
  if (negative) *rn = -*rn;
  return Rational(*rn, *rd);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(value_.get_num().get_str(16));
  return h ^ (std::hash<std::string>{}(value_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class lcm_denominator(const Rational& a, const mpz_class& acc) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), a.raw().get_den_mpz_t());
  return out;
}

}  // namespace abel
