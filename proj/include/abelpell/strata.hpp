#ifndef ABELPELL_STRATA_HPP
#define ABELPELL_STRATA_HPP

#include <cstddef>
#include <vector>

#include "abelpell/multipoly.hpp"
#include "abelpell/pell.hpp"
#include "abelpell/unipoly.hpp"

namespace abel {

// Q[a]/(a^k). Elements are UniPoly in a of degree below k.
class TruncatedRing {
 public:
  explicit TruncatedRing(int k);
  int order() const { return k_; }
  UniPoly reduce(const UniPoly& x) const;
  UniPoly add(const UniPoly& x, const UniPoly& y) const { return reduce(x + y); }
  UniPoly sub(const UniPoly& x, const UniPoly& y) const { return reduce(x - y); }
  UniPoly mul(const UniPoly& x, const UniPoly& y) const;
  // a^i reduced.
  UniPoly power_of_generator(int i) const;

 private:
  int k_;
};

// Coefficients of sum_{i=0..2n} a^i t^(2n-i) in Q[a]/(a^k), top first.
std::vector<UniPoly> geometric_sum(const TruncatedRing& ring, int n);

// Square root with leading coefficient 1 over the truncated ring, top first,
// coefficient by coefficient; returns the n+1 root coefficients.
std::vector<UniPoly> truncated_sqrt_top(const TruncatedRing& ring, const std::vector<UniPoly>& square, int n);

// True iff the geometric sum of degree 2n is a square in (Q[a]/(a^k))[t].
bool odd_nilpotency_check(int n, int k);

struct WeightedSymmetricSystem {
  std::vector<int> exponents;
  int e = 0;
  std::vector<MultiPoly> generators;  // sigma_1 .. sigma_e in a_1 .. a_m
  std::vector<std::string> variables;
};

// Product prod_i (s - a_i)^(e_i - 1) over the variables a_1..a_m and s.
MultiPoly weighted_product(const std::vector<int>& exponents);

// Reads the sigma_j off the product and verifies the identity by re-expansion.
WeightedSymmetricSystem weighted_sigma(const std::vector<int>& exponents);

// a_i^e + sum_j (-1)^j sigma_j a_i^(e-j) == 0, with i counted from 1.
bool nilpotence_identity_check(const WeightedSymmetricSystem& sys, std::size_t i);

struct TangentRank {
  Chart chart = Chart::uAb;
  int variables = 0;
  int p_variables = 0;
  int q_variables = 0;
  int r_variables = 0;
  int equations = 0;
  int rank = 0;
  int corank = 0;
  int expected_corank = 0;  // g in uAb, g + 1 in wAb
};

// Jacobian of (P, Q, R) -> P^2 - R Q^2 - 1 at t inside the chart.
TangentRank tangent_rank(const PellTriple& t, Chart chart = Chart::uAb);

}  // namespace abel

#endif  // ABELPELL_STRATA_HPP
