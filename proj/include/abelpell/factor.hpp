#ifndef ABELPELL_FACTOR_HPP
#define ABELPELL_FACTOR_HPP

#include <vector>

#include "abelpell/unipoly.hpp"

namespace abel {

struct IrreducibleFactor {
  UniPoly factor;  // monic, irreducible over the rationals
  int multiplicity;
  friend bool operator==(const IrreducibleFactor&, const IrreducibleFactor&) = default;
};

// Complete factorization over the rationals: p = lead(p) * prod factor^multiplicity.
// Zassenhaus: factor modulo a good prime, Hensel-lift, recombine by trial division.
// Factors come back ordered by degree, then coefficients.
std::vector<IrreducibleFactor> factor_rational(const UniPoly& p);

bool is_irreducible(const UniPoly& p);

}  // namespace abel

#endif  // ABELPELL_FACTOR_HPP
