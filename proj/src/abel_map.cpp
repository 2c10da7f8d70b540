#include "abelpell/abel_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "abelpell/errors.hpp"
#include "abelpell/factor.hpp"
#include "abelpell/linalg.hpp"
#include "abelpell/number_field.hpp"

namespace abel {

namespace {

Partition partition_from(const std::vector<SquarefreeFactor>& sqf) {
  std::vector<int> parts;
  for (const auto& [f, mult] : sqf) parts.insert(parts.end(), static_cast<std::size_t>(f.degree()), mult);
  return make_partition(std::move(parts));
}

// Validates and returns the triple unchanged; the stored fields may be stale otherwise.
PellTriple checked(const PellTriple& t) { return make_pell_triple(t.P, t.Q, t.R); }

}  // namespace

AssignedProfile assigned_profile(const PellTriple& input) {
  const PellTriple t = checked(input);
  const auto minus_one = squarefree_decomposition(t.P - UniPoly::constant(1));
  const auto plus_one = squarefree_decomposition(t.P + UniPoly::constant(1));

  // Odd multiplicities give the zeros of R, the halves of the multiplicities give Q.
  UniPoly odd = UniPoly::constant(1);
  UniPoly half = UniPoly::constant(1);
  for (const auto* sqf : {&minus_one, &plus_one}) {
    for (const auto& [f, mult] : *sqf) {
      if (mult % 2 != 0) odd *= f;
      half *= f.pow(static_cast<unsigned>(mult / 2));
    }
  }
  if (odd != t.R.monic()) throw InvalidInput("odd-multiplicity roots of P^2 - 1 do not match the roots of R");
  if (half != t.Q.monic()) throw InvalidInput("doubled roots of P^2 - 1 do not match the roots of Q");

  AssignedProfile out;
  out.over_plus = partition_from(minus_one);
  out.over_minus = partition_from(plus_one);
  out.over_infinity = Partition{t.order};
  return out;
}

AbelMapView abel_map_view(const PellTriple& input) {
  const PellTriple t = checked(input);
  if (t.P * t.P - UniPoly::constant(1) != t.R * t.Q * t.Q) throw std::logic_error("P^2 - 1 != R Q^2");
  return AbelMapView{t, t.P, assigned_profile(t)};
}

UniPoly branch_polynomial(const UniPoly& P) {
  const int n = P.degree();
  if (n < 1) throw InvalidInput("branch polynomial needs a nonconstant map");
  const UniPoly dP = P.derivative();
  if (dP.is_zero()) throw std::logic_error("P' vanishes identically");
  const int m = dP.degree();
  const UniPoly t = UniPoly::x();
  // Coefficients of P(x) - t as elements of Q[t].
  std::vector<UniPoly> a(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = UniPoly::constant(P.coeff(i));
  a[0] -= t;
  if (m == 0) return UniPoly::constant(dP.lead().pow(static_cast<unsigned>(n)));
  const auto size = static_cast<std::size_t>(n + m);
  Matrix<UniPoly> sylvester(size, std::vector<UniPoly>(size));
  for (int row = 0; row < m; ++row) {
    for (int j = 0; j <= n; ++j) sylvester[row][static_cast<std::size_t>(row + j)] = a[static_cast<std::size_t>(n - j)];
  }
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j <= m; ++j) {
      sylvester[static_cast<std::size_t>(m + row)][static_cast<std::size_t>(row + j)] = UniPoly::constant(dP.coeff(m - j));
    }
  }
  return bareiss_determinant(std::move(sylvester));
}

Partition fibre_partition(const UniPoly& P, const UniPoly& m) {
  NumberField K(m);
  FieldPoly f = shift_by_element(K, P, K.generator());
  std::vector<int> parts;
  for (const auto& [factor, mult] : squarefree_decomposition(K, f)) {
    parts.insert(parts.end(), factor.size() - 1, mult);
  }
  Partition out = make_partition(std::move(parts));
  if (partition_sum(out) != P.degree()) throw std::logic_error("fibre partition does not sum to deg P");
  return out;
}

std::vector<UnassignedBranch> unassigned_branch(const PellTriple& input) {
  const PellTriple t = checked(input);
  const UniPoly B = branch_polynomial(t.P);
  std::vector<UnassignedBranch> out;
  if (B.degree() < 1) return out;
  const UniPoly t_minus_one{Rational(-1), Rational(1)};
  const UniPoly t_plus_one{Rational(1), Rational(1)};
  for (const auto& [m, mult] : factor_rational(B)) {
    if (m == t_minus_one || m == t_plus_one) continue;
    out.push_back(UnassignedBranch{m, fibre_partition(t.P, m), m.degree()});
  }
  return out;
}

RamSpec ramspec_of(const PellTriple& input) {
  const PellTriple t = checked(input);
  const AssignedProfile profile = assigned_profile(t);
  RamSpec spec;
  spec.order = t.order;
  spec.over_plus = profile.over_plus;
  spec.over_minus = profile.over_minus;
  for (const auto& branch : unassigned_branch(t)) {
    spec.unassigned.insert(spec.unassigned.end(), static_cast<std::size_t>(branch.conjugates), branch.partition);
  }
  std::sort(spec.unassigned.begin(), spec.unassigned.end());
  if (spec.total_ramification() != spec.order - 1) {
    throw std::logic_error("total ramification of the specification differs from n - 1");
  }
  spec.validate();
  return spec;
}

HurwitzReport hurwitz_report(const PellTriple& input) {
  const PellTriple t = checked(input);
  const RamSpec spec = ramspec_of(t);
  HurwitzReport rep;
  rep.order = t.order;
  rep.genus = t.genus;
  const int n = t.order;
  const int g = t.genus;

  auto ramified = [](const Partition& p) {
    return static_cast<int>(std::count_if(p.begin(), p.end(), [](int e) { return e >= 2; }));
  };
  for (const auto& s : spec.unassigned) rep.e += ramified(s);
  rep.e_prime = ramified(spec.over_plus) + ramified(spec.over_minus);
  rep.w = spec.marked_odd_parts();
  rep.riemann_hurwitz_total = spec.total_ramification() + (n - 1);
  rep.genus_check = genus_of_ramspec(spec) == g;

  auto simple_marked = [](const Partition& p) { return std::all_of(p.begin(), p.end(), [](int e) { return e <= 2; }); };
  auto single_simple = [](const Partition& p) {
    return std::count(p.begin(), p.end(), 2) == 1 && std::all_of(p.begin(), p.end(), [](int e) { return e <= 2; });
  };
  rep.generic_stratum = simple_marked(spec.over_plus) && simple_marked(spec.over_minus) &&
                        std::all_of(spec.unassigned.begin(), spec.unassigned.end(), single_simple);

  rep.map_hurwitz_formula = -2 == -2 * n + n - 1 + rep.e_prime + rep.e;
  rep.cover_hurwitz_formula = 2 * g - 2 == -4 + (2 * n - 2 * rep.e_prime);
  rep.e_equals_genus = rep.e == g;

  if (rep.riemann_hurwitz_total != 2 * n - 2) throw std::logic_error("Riemann-Hurwitz total differs from 2n - 2");
  if (rep.w != 2 * g + 2) throw std::logic_error("odd-index count over +-1 differs from 2g + 2");
  if (!rep.genus_check) throw std::logic_error("genus of the ramification specification differs from the curve genus");
  if (rep.generic_stratum && !(rep.map_hurwitz_formula && rep.cover_hurwitz_formula && rep.e_equals_genus)) {
    throw std::logic_error("generic-stratum Hurwitz identities failed");
  }
  return rep;
}

}  // namespace abel
