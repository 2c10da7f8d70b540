#include "abelpell/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "abelpell/errors.hpp"

namespace abel {

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending, no trailing zeros
using ModPoly = std::vector<std::int64_t>;

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x]; coefficients kept in [0, p).

struct PrimeField {
  std::int64_t p;

  std::int64_t reduce(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t reduce(const mpz_class& a) const {
    mpz_class r = a % p;
    if (r < 0) r += p;
    return r.get_si();
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t inverse(std::int64_t a) const {
    std::int64_t t = 0, new_t = 1, r = p, new_r = reduce(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
      std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw std::logic_error("non-invertible residue");
    return reduce(t);
  }

  void trim(ModPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ModPoly from(const ZPoly& f) const {
    ModPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = reduce(f[i]);
    trim(out);
    return out;
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = reduce(out[i] - b[i]);
    trim(out);
    return out;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
  }
  ModPoly scale(ModPoly a, std::int64_t c) const {
    for (auto& v : a) v = mul(v, reduce(c));
    trim(a);
    return a;
  }
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    if (b.empty()) throw std::logic_error("modular division by zero");
    if (a.size() < b.size()) return {{}, a};
    ModPoly r = a;
    ModPoly q(a.size() - b.size() + 1, 0);
    std::int64_t inv = inverse(b.back());
    for (std::size_t i = a.size(); i-- >= b.size();) {
      std::int64_t c = mul(r[i], inv);
      q[i - (b.size() - 1)] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t idx = i - (b.size() - 1) + j;
        r[idx] = reduce(r[idx] - mul(c, b[j]));
      }
      if (i == 0) break;
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
    return {q, r};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    return scale(std::move(a), inverse(a.back()));
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }
  // s*a + t*b = 1 for coprime a, b.
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("Hensel factors are not coprime modulo p");
    std::int64_t inv = inverse(r0[0]);
    return {scale(s0, inv), scale(t0, inv)};
  }
  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(a[i], reduce(static_cast<std::int64_t>(i)));
    trim(out);
    return out;
  }
  ModPoly powmod(ModPoly base, mpz_class exponent, const ModPoly& modulus) const {
    ModPoly result{1};
    base = rem(base, modulus);
    while (exponent > 0) {
      if (mpz_odd_p(exponent.get_mpz_t())) result = rem(mul(result, base), modulus);
      exponent >>= 1;
      if (exponent > 0) base = rem(mul(base, base), modulus);
    }
    return result;
  }
};

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree f whose
// irreducible factors all have degree d.
void equal_degree_split(const PrimeField& F, const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  mpz_class exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coeff(0, F.p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    F.trim(a);
    if (a.size() <= 1) continue;
    ModPoly b = F.sub(F.powmod(a, exponent, f), ModPoly{1});
    ModPoly g = F.gcd(f, b);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree_split(F, g, d, rng, out);
      equal_degree_split(F, F.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<ModPoly> factor_mod_p(const PrimeField& F, ModPoly f, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  ModPoly x{0, 1};
  ModPoly h = x;
  mpz_class p = static_cast<long>(F.p);
  int d = 1;
  while (static_cast<int>(f.size()) - 1 >= 2 * d) {
    h = F.powmod(h, p, f);
    ModPoly g = F.gcd(f, F.sub(h, x));
    if (g.size() > 1) {
      equal_degree_split(F, g, d, rng, out);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
    ++d;
  }
  if (f.size() > 1) out.push_back(F.monic(f));
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly a) {
  mpz_class g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

ZPoly to_integer(const UniPoly& p) {
  mpz_class den = common_denominator(p);
  ZPoly out;
  for (const auto& c : p.coefficients()) out.push_back(c.numerator() * (den / c.denominator()));
  return primitive(out);
}

UniPoly to_rational(const ZPoly& a) {
  std::vector<Rational> c;
  c.reserve(a.size());
  for (const auto& v : a) c.emplace_back(v);
  return UniPoly(std::move(c));
}

ZPoly mods(const ZPoly& a, const mpz_class& m) {
  ZPoly out(a.size());
  mpz_class half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class r = a[i] % m;
    if (r < 0) r += m;
    if (r > half) r -= m;
    out[i] = r;
  }
  trim(out);
  return out;
}

ZPoly modn(const ZPoly& a, const mpz_class& m) {
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class r = a[i] % m;
    if (r < 0) r += m;
    out[i] = r;
  }
  trim(out);
  return out;
}

ZPoly lift_mod(const ModPoly& a) {
  ZPoly out;
  for (auto v : a) out.emplace_back(static_cast<long>(v));
  trim(out);
  return out;
}

// Linear Hensel lifting of f = g*h (mod p), g monic, to modulus p^k.
std::pair<ZPoly, ZPoly> hensel_lift(const PrimeField& F, const ZPoly& f, const ModPoly& g0, const ModPoly& h0, int k) {
  auto [s, t] = F.bezout(g0, h0);
  ZPoly g = lift_mod(g0);
  ZPoly h = lift_mod(h0);
  mpz_class q = static_cast<long>(F.p);
  for (int j = 1; j < k; ++j) {
    ZPoly gh = zmul(g, h);
    ZPoly e(std::max(f.size(), gh.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) {
      if (!mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) throw std::logic_error("Hensel invariant broken");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    }
    trim(e);
    ModPoly em = F.from(e);
    ModPoly tau = F.rem(F.mul(t, em), g0);
    ModPoly sigma = F.divmod(F.sub(em, F.mul(tau, h0)), g0).first;
    ZPoly tz = lift_mod(tau), sz = lift_mod(sigma);
    g.resize(std::max(g.size(), tz.size()), 0);
    for (std::size_t i = 0; i < tz.size(); ++i) g[i] += q * tz[i];
    h.resize(std::max(h.size(), sz.size()), 0);
    for (std::size_t i = 0; i < sz.size(); ++i) h[i] += q * sz[i];
    q *= F.p;
    g = modn(g, q);
    h = modn(h, q);
  }
  return {g, h};
}

std::vector<std::int64_t> small_primes() {
  std::vector<std::int64_t> primes;
  const int limit = 20000;
  std::vector<bool> composite(limit + 1, false);
  for (int i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    if (i > 2) primes.push_back(i);
    for (long j = static_cast<long>(i) * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

bool divides_exactly(const ZPoly& d, const ZPoly& f, ZPoly& quotient) {
  auto [q, r] = divmod(to_rational(f), to_rational(d));
  if (!r.is_zero()) return false;
  for (const auto& c : q.coefficients()) {
    if (!c.is_integer()) return false;
  }
  quotient = to_integer(q);
  // to_integer strips content; restore it so that d * quotient == f.
  ZPoly check = zmul(d, quotient);
  if (check != f) {
    for (auto& c : quotient) c = -c;
  }
  return true;
}

// Irreducible factors over Z of a primitive squarefree polynomial with positive lead.
std::vector<ZPoly> factor_squarefree(ZPoly f) {
  if (f.size() <= 2) return {f};
  const int n = static_cast<int>(f.size()) - 1;
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long>(n));

  // Pick the prime with the fewest modular factors among a few good candidates.
  const PrimeField* chosen = nullptr;
  PrimeField best{0};
  std::vector<ModPoly> best_factors;
  int candidates = 0;
  for (std::int64_t p : small_primes()) {
    PrimeField F{p};
    if (F.reduce(f.back()) == 0) continue;
    ModPoly fm = F.from(f);
    if (F.gcd(fm, F.derivative(fm)).size() != 1) continue;
    auto factors = factor_mod_p(F, F.monic(fm), rng);
    if (chosen == nullptr || factors.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(factors);
      chosen = &best;
    }
    if (best_factors.size() == 1 || ++candidates >= 5) break;
  }
  if (chosen == nullptr) throw std::logic_error("no good prime found for factorization");
  if (best_factors.size() == 1) return {f};

  // Lift until p^k exceeds twice the coefficient bound on lead * (any factor).
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = (mpz_class(1) << n) * norm * abs(f.back());
  mpz_class modulus = static_cast<long>(best.p);
  int k = 1;
  while (modulus <= 2 * bound) {
    modulus *= best.p;
    ++k;
  }

  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    ModPoly rest_mod = best.from(rest);
    ModPoly others = best.divmod(rest_mod, best_factors[i]).first;
    auto [g, h] = hensel_lift(best, rest, best_factors[i], others, k);
    lifted.push_back(g);
    rest = h;
  }
  {
    // Remaining factor: rest = lead * g_last (mod p^k); make it monic.
    mpz_class inv;
    mpz_class lc = rest.back() % modulus;
    if (lc < 0) lc += modulus;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly last = rest;
    for (auto& c : last) c *= inv;
    lifted.push_back(modn(last, modulus));
  }

  // Recombination by subsets of increasing size.
  std::vector<ZPoly> found;
  ZPoly remaining = f;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly candidate{mpz_class(remaining.back())};
      for (std::size_t i : idx) candidate = modn(zmul(candidate, lifted[i]), modulus);
      candidate = primitive(mods(candidate, modulus));
      ZPoly quotient;
      if (candidate.size() > 1 && divides_exactly(candidate, remaining, quotient)) {
        found.push_back(candidate);
        remaining = quotient;
        for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
        progress = true;
        break;
      }
      // next combination
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == lifted.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++size;
  }
  if (remaining.size() > 1) found.push_back(primitive(remaining));
  return found;
}

}  // namespace

std::vector<IrreducibleFactor> factor_rational(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  std::vector<IrreducibleFactor> out;
  for (const auto& [part, multiplicity] : squarefree_decomposition(p)) {
    for (const auto& z : factor_squarefree(to_integer(part))) {
      out.push_back({to_rational(z).monic(), multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return out;
}

bool is_irreducible(const UniPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_rational(p);
  return f.size() == 1 && f.front().multiplicity == 1;
}

}  // namespace abel
