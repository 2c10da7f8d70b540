#include "abelpell/number_field.hpp"

#include <stdexcept>

#include "abelpell/errors.hpp"

namespace abel {

NumberField::NumberField(UniPoly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw InvalidInput("number field modulus must have positive degree");
  modulus_ = modulus_.monic();
}

UniPoly NumberField::inverse(const UniPoly& a) const {
  auto eg = extended_gcd(reduce(a), modulus_);
  if (eg.gcd.degree() != 0) throw std::logic_error("element is not invertible; modulus is reducible or element is zero");
  return reduce(eg.s);
}

namespace {

void trim(FieldPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const FieldPoly& f) { return static_cast<int>(f.size()) - 1; }

FieldPoly sub(const NumberField& K, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = K.reduce(out[i] - b[i]);
  trim(out);
  return out;
}

FieldPoly derivative(const NumberField& K, const FieldPoly& f) {
  if (f.size() <= 1) return {};
  FieldPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = K.reduce(f[i] * Rational(i));
  trim(out);
  return out;
}

FieldPoly monic(const NumberField& K, FieldPoly f) {
  if (f.empty()) return f;
  UniPoly inv = K.inverse(f.back());
  for (auto& c : f) c = K.mul(c, inv);
  return f;
}

std::pair<FieldPoly, FieldPoly> divmod(const NumberField& K, const FieldPoly& a, const FieldPoly& b) {
  if (b.empty()) throw std::logic_error("division by the zero polynomial over a number field");
  if (a.size() < b.size()) return {{}, a};
  FieldPoly r = a;
  FieldPoly q(a.size() - b.size() + 1);
  UniPoly inv = K.inverse(b.back());
  const int db = degree(b);
  for (int i = degree(a); i >= db; --i) {
    if (r[static_cast<std::size_t>(i)].is_zero()) continue;
    UniPoly c = K.mul(r[static_cast<std::size_t>(i)], inv);
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = K.reduce(r[idx] - c * b[static_cast<std::size_t>(j)]);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
  return {q, r};
}

FieldPoly exact_quotient(const NumberField& K, const FieldPoly& a, const FieldPoly& b) {
  auto [q, r] = divmod(K, a, b);
  if (!r.empty()) throw std::logic_error("inexact division over a number field");
  return q;
}

FieldPoly gcd(const NumberField& K, FieldPoly a, FieldPoly b) {
  while (!b.empty()) {
    FieldPoly r = divmod(K, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, std::move(a));
}

}  // namespace

std::vector<FieldSquarefreeFactor> squarefree_decomposition(const NumberField& K, const FieldPoly& input) {
  FieldPoly f = input;
  for (auto& c : f) c = K.reduce(c);
  trim(f);
  if (f.empty()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  std::vector<FieldSquarefreeFactor> out;
  if (degree(f) == 0) return out;
  f = monic(K, f);
  FieldPoly df = derivative(K, f);
  FieldPoly a = gcd(K, f, df);
  FieldPoly b = exact_quotient(K, f, a);
  FieldPoly c = exact_quotient(K, df, a);
  FieldPoly d = sub(K, c, derivative(K, b));
  int multiplicity = 1;
  while (degree(b) > 0) {
    FieldPoly g = gcd(K, b, d);
    if (degree(g) > 0) out.push_back({g, multiplicity});
    b = exact_quotient(K, b, g);
    c = exact_quotient(K, d, g);
    d = sub(K, c, derivative(K, b));
    ++multiplicity;
  }
  return out;
}

FieldPoly shift_by_element(const NumberField& K, const UniPoly& p, const UniPoly& theta) {
  FieldPoly out;
  for (const auto& c : p.coefficients()) out.push_back(UniPoly::constant(c));
  if (out.empty()) out.emplace_back();
  out[0] = K.reduce(out[0] - theta);
  trim(out);
  return out;
}

}  // namespace abel
