#ifndef ABELPELL_NUMBER_FIELD_HPP
#define ABELPELL_NUMBER_FIELD_HPP

#include <utility>
#include <vector>

#include "abelpell/unipoly.hpp"

namespace abel {

// K = Q[t]/(m(t)) for a monic irreducible m. Elements are UniPoly in t reduced mod m.
class NumberField {
 public:
  explicit NumberField(UniPoly modulus);

  const UniPoly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }

  UniPoly reduce(const UniPoly& a) const { return rem(a, modulus_); }
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return reduce(a * b); }
  UniPoly inverse(const UniPoly& a) const;
  // The class of t, a root of the modulus.
  UniPoly generator() const { return reduce(UniPoly::x()); }

 private:
  UniPoly modulus_;
};

// Polynomial in x with coefficients in a number field, ascending.
using FieldPoly = std::vector<UniPoly>;

struct FieldSquarefreeFactor {
  FieldPoly factor;  // monic
  int multiplicity;
};

// Yun decomposition over K[x].
std::vector<FieldSquarefreeFactor> squarefree_decomposition(const NumberField& K, const FieldPoly& f);

// Rational polynomial minus a constant of K, i.e. p(x) - theta.
FieldPoly shift_by_element(const NumberField& K, const UniPoly& p, const UniPoly& theta);

}  // namespace abel

#endif  // ABELPELL_NUMBER_FIELD_HPP
