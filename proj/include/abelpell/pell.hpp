#ifndef ABELPELL_PELL_HPP
#define ABELPELL_PELL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abelpell/rational.hpp"
#include "abelpell/unipoly.hpp"

namespace abel {

// Parameter charts of the moduli of Abel curves, from loosest to strictest:
// vAb (R monic squarefree, P and Q with invertible tops), wAb (P, Q monic),
// uAb (additionally R normalised).
enum class Chart { vAb, wAb, uAb };

std::string_view chart_name(Chart c);
Chart parse_chart(std::string_view name);

// A solution of P^2 - R Q^2 = 1 with R monic squarefree of degree 2g+2,
// deg P = n, deg Q = n - g - 1. Built through make_pell_triple, which validates.
struct PellTriple {
  UniPoly P;
  UniPoly Q;
  UniPoly R;
  int order = 0;
  int genus = 0;
  Chart chart = Chart::vAb;

  friend bool operator==(const PellTriple&, const PellTriple&) = default;
};

struct VerificationReport {
  bool valid = false;
  int order = -1;
  int genus = -1;
  bool in_vab = false;
  bool in_wab = false;
  bool in_uab = false;
  std::vector<std::string> failures;
};

// Checks every PellTriple invariant and reports each one that fails.
VerificationReport pell_verify(const UniPoly& P, const UniPoly& Q, const UniPoly& R);

// Validated construction; throws InvalidInput listing the failed invariants.
PellTriple make_pell_triple(const UniPoly& P, const UniPoly& Q, const UniPoly& R);

// The unit 1 + 0*sqrt(R): neutral for pell_compose, order 0, not a valid triple on its own.
PellTriple identity_triple(const UniPoly& R);

// (A + sqrt(R)) / B with B | R - A^2.
struct QuadraticSurd {
  UniPoly A;
  UniPoly B;
  UniPoly R;
};

struct Convergent {
  UniPoly p;
  UniPoly q;
  UniPoly norm;  // p^2 - R q^2, equal to (-1)^(k+1) B_(k+1)
  bool constant_norm = false;
};

struct CfStep {
  QuadraticSurd surd;       // alpha_k
  UniPoly partial_quotient; // a_k = polynomial part of alpha_k
  Convergent convergent;    // p_k / q_k
};

struct CfExpansion {
  UniPoly R;
  UniPoly sqrt_polypart;
  std::vector<CfStep> steps;
};

// Continued fraction of sqrt(R) in exact surd arithmetic.
CfExpansion cf_expand(const UniPoly& R, int max_steps);

struct FundamentalUnit {
  UniPoly p;
  UniPoly q;
  Rational norm;  // p^2 - R q^2
  int step = 0;   // convergent index
};

// Full record of a solver run, including the search provenance.
struct PellSearch {
  UniPoly R;
  int genus = 0;
  int n_max = 0;
  int convergents_examined = 0;
  int max_degree_examined = 0;
  std::optional<FundamentalUnit> unit;
  bool unit_squared = false;  // the unit's norm was not a rational square
  std::optional<PellTriple> triple;
};

PellSearch pell_search(const UniPoly& R, int n_max);
// Minimal-order solution of order <= n_max over the rationals, if any.
std::optional<PellTriple> pell_solve(const UniPoly& R, int n_max);

// (P1 + sqrt(R) Q1)(P2 + sqrt(R) Q2), sign-normalised so that P has positive lead.
PellTriple pell_compose(const PellTriple& a, const PellTriple& b);
PellTriple pell_power(const PellTriple& t, unsigned k);

// x -> a x + b with Q scaled by lambda and R by lambda^-2.
struct ChartTransform {
  Rational a{1};
  Rational b{0};
  Rational lambda{1};
};

struct Normalized {
  PellTriple triple;
  ChartTransform transform;
};

// Reaching the target needs a root that is not rational.
struct RadicalObstruction {
  unsigned root_degree = 0;
  Rational radicand;
  std::string describe() const;
};

using NormalizeResult = std::variant<Normalized, RadicalObstruction>;

NormalizeResult normalize(const UniPoly& P, const UniPoly& Q, const UniPoly& R, Chart target);

// The three fixed-point constructions under mu_m.
enum class InflateCase { divides_g_plus_1, even_half, odd };

std::string_view inflate_case_name(InflateCase c);
InflateCase parse_inflate_case(std::string_view name);

PellTriple inflate(const PellTriple& base, int m, InflateCase kind);

}  // namespace abel

#endif  // ABELPELL_PELL_HPP
