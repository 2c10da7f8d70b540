#ifndef ABELPELL_ABEL_MAP_HPP
#define ABELPELL_ABEL_MAP_HPP

#include <vector>

#include "abelpell/pell.hpp"
#include "abelpell/ramspec.hpp"
#include "abelpell/unipoly.hpp"

namespace abel {

// Fibre profiles of the Abel map x -> P(x) over the assigned values.
struct AssignedProfile {
  Partition over_plus;      // from P - 1
  Partition over_minus;     // from P + 1
  Partition over_infinity;  // always {n}
};

// Checks the divisor identity P^*{+-1} = (zeros of R) + 2 (zeros of Q) on the way.
AssignedProfile assigned_profile(const PellTriple& t);

// P seen as a degree-n self-map of the projective line with assigned values +1, -1, infinity.
struct AbelMapView {
  PellTriple triple;
  UniPoly map;
  AssignedProfile profile;
};

AbelMapView abel_map_view(const PellTriple& t);

// Resultant in x of P(x) - t and P'(x), as a polynomial in t.
UniPoly branch_polynomial(const UniPoly& P);

// Partition of n given by the root multiplicities of P(x) - theta, where theta
// is a root of the irreducible m, computed with gcds over Q[t]/(m).
Partition fibre_partition(const UniPoly& P, const UniPoly& m);

struct UnassignedBranch {
  UniPoly branch_factor;  // monic irreducible m(t), not t - 1 or t + 1
  Partition partition;    // fibre profile over each root of m
  int conjugates = 0;     // deg m: number of branch points over the algebraic closure
};

std::vector<UnassignedBranch> unassigned_branch(const PellTriple& t);

RamSpec ramspec_of(const PellTriple& t);

struct HurwitzReport {
  int e = 0;        // ramification points over unassigned branch points
  int e_prime = 0;  // ramification points over +1 and -1
  int w = 0;        // odd-index points over +1 and -1
  int order = 0;
  int genus = 0;
  int riemann_hurwitz_total = 0;  // sum of (e_p - 1) over all points including infinity
  bool genus_check = false;
  bool generic_stratum = false;
  // -2 = -2n + n - 1 + e' + e, 2g - 2 = -4 + (2n - 2e') and e = g, evaluated as stated.
  bool map_hurwitz_formula = false;
  bool cover_hurwitz_formula = false;
  bool e_equals_genus = false;
};

// Throws std::logic_error when an identity that must hold fails.
HurwitzReport hurwitz_report(const PellTriple& t);

}  // namespace abel

#endif  // ABELPELL_ABEL_MAP_HPP
