#ifndef ABELPELL_TESTS_FIXTURES_HPP
#define ABELPELL_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "abelpell/parse.hpp"
#include "abelpell/pell.hpp"
#include "oracles.hpp"

namespace fixtures {

inline abel::UniPoly poly(const std::string& s) { return abel::parse_poly(s); }

inline abel::PellTriple triple(const std::string& P, const std::string& Q, const std::string& R) {
  return abel::make_pell_triple(poly(P), poly(Q), poly(R));
}

// (T_k, U_(k-1), x^2 - 1) for k = 1..10.
inline std::vector<abel::PellTriple> chebyshev_family() {
  std::vector<abel::PellTriple> out;
  for (int k = 1; k <= 10; ++k) {
    auto [p, q] = oracle::chebyshev(k);
    out.push_back(abel::make_pell_triple(oracle::to_poly(p), oracle::to_poly(q), poly("x^2-1")));
  }
  return out;
}

// The named triples plus the Chebyshev family.
inline std::vector<abel::PellTriple> core_family() {
  std::vector<abel::PellTriple> out{
      triple("x", "1", "x^2-1"),
      triple("x^2-1", "x", "x^2-2"),
      triple("x^2+1", "x", "x^2+2"),
      triple("x^2", "1", "x^4-1"),
      triple("2*x^4+1", "2*x^2", "x^4+1"),
  };
  for (auto& t : chebyshev_family()) out.push_back(t);
  return out;
}

// Larger family: inflations, powers, and a translated chart point.
inline std::vector<abel::PellTriple> extended_family() {
  auto out = core_family();
  const auto a = triple("x^2-1", "x", "x^2-2");
  const auto b = triple("x+1", "1", "x^2+2*x");
  out.push_back(abel::inflate(a, 2, abel::InflateCase::divides_g_plus_1));
  out.push_back(abel::inflate(a, 3, abel::InflateCase::divides_g_plus_1));
  out.push_back(abel::inflate(b, 3, abel::InflateCase::odd));
  out.push_back(abel::inflate(b, 5, abel::InflateCase::odd));
  out.push_back(abel::inflate(b, 2, abel::InflateCase::even_half));
  out.push_back(abel::inflate(b, 4, abel::InflateCase::even_half));
  out.push_back(b);
  out.push_back(triple("x^2+2*x", "x+1", "x^2+2*x-1"));
  for (unsigned k = 2; k <= 3; ++k) {
    out.push_back(abel::pell_power(a, k));
    out.push_back(abel::pell_power(triple("x^2", "1", "x^4-1"), k));
  }
  return out;
}

}  // namespace fixtures

#endif  // ABELPELL_TESTS_FIXTURES_HPP
