#include "abelpell/pell.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "abelpell/errors.hpp"
#include "abelpell/laurent.hpp"

namespace abel {

std::string_view chart_name(Chart c) {
  switch (c) {
    case Chart::vAb: return "vAb";
    case Chart::wAb: return "wAb";
    case Chart::uAb: return "uAb";
  }
  return "?";
}

Chart parse_chart(std::string_view name) {
  if (name == "vAb" || name == "v") return Chart::vAb;
  if (name == "wAb" || name == "w") return Chart::wAb;
  if (name == "uAb" || name == "u") return Chart::uAb;
  throw InvalidInput("unknown chart '" + std::string(name) + "' (expected vAb, wAb or uAb)");
}

VerificationReport pell_verify(const UniPoly& P, const UniPoly& Q, const UniPoly& R) {
  VerificationReport rep;
  auto& fail = rep.failures;
  bool r_ok = true;
  if (R.is_zero()) {
    fail.emplace_back("R is zero");
    r_ok = false;
  } else {
    if (!R.is_monic()) fail.push_back("R is not monic (leading coefficient " + R.lead().str() + ")");
    if (R.degree() < 2 || R.degree() % 2 != 0) {
      fail.push_back("deg R = " + std::to_string(R.degree()) + " is not of the form 2g+2 with g >= 0");
      r_ok = false;
    }
    if (!is_squarefree(R)) fail.emplace_back("R is not squarefree");
  }
  if (P.is_zero()) fail.emplace_back("P is zero");
  if (Q.is_zero()) fail.emplace_back("Q is zero");

  UniPoly norm = P * P - R * Q * Q;
  if (norm != UniPoly::constant(1)) fail.push_back("P^2 - R*Q^2 = " + norm.str() + ", not 1");

  rep.order = P.degree();
  if (r_ok) {
    rep.genus = R.degree() / 2 - 1;
    if (!P.is_zero() && rep.order < rep.genus + 1) {
      fail.push_back("order n = " + std::to_string(rep.order) + " is below g + 1 = " + std::to_string(rep.genus + 1));
    }
    if (!Q.is_zero() && Q.degree() != rep.order - rep.genus - 1) {
      fail.push_back("deg Q = " + std::to_string(Q.degree()) + " differs from n - g - 1 = " +
                     std::to_string(rep.order - rep.genus - 1));
    }
  }
  rep.valid = fail.empty();
  rep.in_vab = rep.valid;
  rep.in_wab = rep.valid && P.is_monic() && Q.is_monic();
  rep.in_uab = rep.in_wab && R.is_normalised();
  return rep;
}

PellTriple make_pell_triple(const UniPoly& P, const UniPoly& Q, const UniPoly& R) {
  VerificationReport rep = pell_verify(P, Q, R);
  if (!rep.valid) {
    std::ostringstream os;
    os << "not a Pell triple:";
    for (const auto& f : rep.failures) os << " [" << f << "]";
    throw InvalidInput(os.str());
  }
  Chart chart = rep.in_uab ? Chart::uAb : (rep.in_wab ? Chart::wAb : Chart::vAb);
  return PellTriple{P, Q, R, rep.order, rep.genus, chart};
}

PellTriple identity_triple(const UniPoly& R) {
  if (R.degree() < 2 || R.degree() % 2 != 0) throw InvalidInput("identity triple needs deg R = 2g+2");
  return PellTriple{UniPoly::constant(1), UniPoly(), R, 0, R.degree() / 2 - 1, Chart::vAb};
}

namespace {

void require_pell_modulus(const UniPoly& R) {
  if (R.is_zero() || R.degree() < 2 || R.degree() % 2 != 0) {
    throw InvalidInput("R must have even degree 2g+2 >= 2, got degree " + std::to_string(R.degree()));
  }
  if (!R.is_monic()) throw InvalidInput("R must be monic");
  if (!is_squarefree(R)) throw InvalidInput("R must be squarefree");
}

}  // namespace

CfExpansion cf_expand(const UniPoly& R, int max_steps) {
  require_pell_modulus(R);
  if (max_steps < 1) throw InvalidInput("max_steps must be positive");
  CfExpansion out{R, laurent_sqrt_polypart(R), {}};
  const UniPoly& Y = out.sqrt_polypart;
  UniPoly A;
  UniPoly B = UniPoly::constant(1);
  UniPoly p_prev = UniPoly::constant(1), p_prev2;
  UniPoly q_prev, q_prev2 = UniPoly::constant(1);
  for (int k = 0; k < max_steps; ++k) {
    if (!divides(B, R - A * A)) throw std::logic_error("surd invariant B | R - A^2 violated");
    UniPoly a = quo(A + Y, B);
    UniPoly p = a * p_prev + p_prev2;
    UniPoly q = a * q_prev + q_prev2;
    UniPoly next_A = a * B - A;
    UniPoly next_B = exact_quotient(R - next_A * next_A, B);
    UniPoly norm = p * p - R * q * q;
    UniPoly expected = (k % 2 == 0) ? -next_B : next_B;
    if (norm != expected) throw std::logic_error("convergent norm disagrees with the surd denominator");
    out.steps.push_back(CfStep{QuadraticSurd{A, B, R}, a, Convergent{p, q, norm, norm.degree() == 0}});
    p_prev2 = std::move(p_prev);
    p_prev = std::move(p);
    q_prev2 = std::move(q_prev);
    q_prev = std::move(q);
    A = std::move(next_A);
    B = std::move(next_B);
  }
  return out;
}

PellSearch pell_search(const UniPoly& R, int n_max) {
  require_pell_modulus(R);
  PellSearch search;
  search.R = R;
  search.genus = R.degree() / 2 - 1;
  search.n_max = n_max;
  if (n_max < search.genus + 1) {
    throw InvalidInput("n_max = " + std::to_string(n_max) + " is below g + 1 = " + std::to_string(search.genus + 1));
  }
  // deg p_k >= g + 1 + k, so later convergents cannot have degree <= n_max.
  CfExpansion cf = cf_expand(R, n_max - search.genus);
  for (std::size_t k = 0; k < cf.steps.size(); ++k) {
    const Convergent& c = cf.steps[k].convergent;
    if (c.p.degree() > n_max) break;
    ++search.convergents_examined;
    search.max_degree_examined = c.p.degree();
    if (!c.constant_norm) continue;
    const Rational norm = c.norm.lead();
    search.unit = FundamentalUnit{c.p, c.q, norm, static_cast<int>(k)};
    UniPoly P, Q;
    if (auto root = norm.sqrt()) {
      Rational inv = root->inverse();
      P = c.p * inv;
      Q = c.q * inv;
    } else {
      search.unit_squared = true;
      Rational inv = norm.inverse();
      P = (c.p * c.p + R * c.q * c.q) * inv;
      Q = (c.p * c.q) * (Rational(2) * inv);
    }
    if (P.lead().sign() < 0) {
      P = -P;
      Q = -Q;
    }
    if (P.degree() <= n_max) search.triple = make_pell_triple(P, Q, R);
    break;
  }
  return search;
}

std::optional<PellTriple> pell_solve(const UniPoly& R, int n_max) { return pell_search(R, n_max).triple; }

PellTriple pell_compose(const PellTriple& a, const PellTriple& b) {
  if (a.R != b.R) throw InvalidInput("cannot compose Pell triples over different R");
  UniPoly P = a.P * b.P + a.R * a.Q * b.Q;
  UniPoly Q = a.P * b.Q + b.P * a.Q;
  if (Q.is_zero() && P.degree() == 0) return identity_triple(a.R);
  if (P.lead().sign() < 0) {
    P = -P;
    Q = -Q;
  }
  return make_pell_triple(P, Q, a.R);
}

PellTriple pell_power(const PellTriple& t, unsigned k) {
  PellTriple result = identity_triple(t.R);
  for (unsigned i = 0; i < k; ++i) result = pell_compose(result, t);
  return result;
}

std::string RadicalObstruction::describe() const {
  return "requires a " + std::to_string(root_degree) + "th root of " + radicand.str() + ", which is not rational";
}

NormalizeResult normalize(const UniPoly& P, const UniPoly& Q, const UniPoly& R, Chart target) {
  const PellTriple input = [&] {
    try {
      return make_pell_triple(P, Q, R);
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string("normalize: input is not in vAb: ") + e.what());
    }
  }();
  if (target == Chart::vAb) return Normalized{input, ChartTransform{}};

  const int n = input.order;
  const int g = input.genus;
  const Rational p = P.lead();
  auto a = p.inverse().root(static_cast<unsigned>(n));
  if (!a) return RadicalObstruction{static_cast<unsigned>(n), p};

  Rational lambda = a->pow(static_cast<unsigned>(g + 1));
  // New top of Q is lambda * lead(Q) * a^(n-g-1) = lead(Q)/lead(P) = +-1.
  if ((Q.lead() / p).sign() < 0) lambda = -lambda;
  Rational b = 0;
  if (target == Chart::uAb) b = -R.coeff(2 * g + 1) / Rational(2 * g + 2);

  UniPoly P2 = P.affine_substitute(*a, b);
  UniPoly Q2 = Q.affine_substitute(*a, b) * lambda;
  UniPoly R2 = R.affine_substitute(*a, b) * (lambda * lambda).inverse();
  PellTriple out = make_pell_triple(P2, Q2, R2);
  if (static_cast<int>(out.chart) < static_cast<int>(target)) {
    throw std::logic_error("normalization did not reach the target chart");
  }
  return Normalized{out, ChartTransform{*a, b, lambda}};
}

std::string_view inflate_case_name(InflateCase c) {
  switch (c) {
    case InflateCase::divides_g_plus_1: return "divides_g_plus_1";
    case InflateCase::even_half: return "even_half";
    case InflateCase::odd: return "odd";
  }
  return "?";
}

InflateCase parse_inflate_case(std::string_view name) {
  if (name == "divides_g_plus_1" || name == "divides-g-plus-1" || name == "1") return InflateCase::divides_g_plus_1;
  if (name == "even_half" || name == "even-half" || name == "2") return InflateCase::even_half;
  if (name == "odd" || name == "3") return InflateCase::odd;
  throw InvalidInput("unknown inflate case '" + std::string(name) + "' (expected divides_g_plus_1, even_half or odd)");
}

PellTriple inflate(const PellTriple& base, int m, InflateCase kind) {
  if (m < 2) throw InvalidInput("inflation degree m must be at least 2");
  const PellTriple checked = make_pell_triple(base.P, base.Q, base.R);
  const auto um = static_cast<unsigned>(m);
  UniPoly P = checked.P.substitute_power(um);
  UniPoly Q, R;
  switch (kind) {
    case InflateCase::divides_g_plus_1: {
      if (checked.chart == Chart::vAb) throw InvalidInput("inflate case divides_g_plus_1 needs a base with P and Q monic");
      Q = checked.Q.substitute_power(um);
      R = checked.R.substitute_power(um);
      break;
    }
    case InflateCase::even_half:
    case InflateCase::odd: {
      const bool even = kind == InflateCase::even_half;
      if (even && m % 2 != 0) throw InvalidInput("inflate case even_half needs an even m");
      if (!even && m % 2 == 0) throw InvalidInput("inflate case odd needs an odd m");
      if (!checked.R.coeff(0).is_zero()) throw InvalidInput("inflate case needs R(0) = 0 for the base");
      UniPoly r = checked.R.shift_down(1);
      if (r.coeff(0).is_zero()) throw InvalidInput("inflated R would not be squarefree: r(0) = 0");
      const unsigned q_shift = even ? um / 2 : (um - 1) / 2;
      Q = UniPoly::monomial(1, q_shift) * checked.Q.substitute_power(um);
      R = r.substitute_power(um);
      if (!even) R = UniPoly::x() * R;
      break;
    }
  }
  PellTriple out = make_pell_triple(P, Q, R);
  const int g0 = checked.genus;
  const int g = out.genus;
  bool genus_ok = false;
  switch (kind) {
    case InflateCase::divides_g_plus_1: genus_ok = g + 1 == m * (g0 + 1); break;
    case InflateCase::even_half: genus_ok = 2 * g + 2 == m * (2 * g0 + 1); break;
    case InflateCase::odd: genus_ok = 2 * g + 1 == m * (2 * g0 + 1); break;
  }
  if (!genus_ok || out.order != m * checked.order) throw std::logic_error("inflated triple has unexpected genus or order");
  return out;
}

}  // namespace abel
