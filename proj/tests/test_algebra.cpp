#include <random>

#include "doctest.h"

#include "abelpell/errors.hpp"
#include "abelpell/laurent.hpp"
#include "abelpell/linalg.hpp"
#include "abelpell/multipoly.hpp"
#include "abelpell/rational.hpp"
#include "abelpell/unipoly.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abel;
using fixtures::poly;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int degree, int range = 5) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(coeff(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return UniPoly(c);
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("arithmetic stays in lowest terms") {
    Rational a(6, 4);
    CHECK(a.str() == "3/2");
    CHECK((a + Rational(1, 2)).str() == "2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK((Rational(1, 3) * Rational(3)).is_one());
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK_THROWS_AS(Rational::parse("1/x"), InvalidInput);
  }

  TEST_CASE("exact roots") {
    CHECK(Rational(4, 9).sqrt() == Rational(2, 3));
    CHECK_FALSE(Rational(2).sqrt().has_value());
    CHECK_FALSE(Rational(-4).sqrt().has_value());
    CHECK(Rational(-8, 27).root(3) == Rational(-2, 3));
    CHECK(Rational(16).root(4) == Rational(2));
    CHECK_FALSE(Rational(2).root(4).has_value());
  }

  TEST_CASE("ordering and hashing agree with equality") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
  }
}

TEST_SUITE("unipoly") {
  TEST_CASE("construction trims and prints in descending order") {
    UniPoly p{Rational(1), Rational(0), Rational(0), Rational(0), Rational(2), Rational(0)};
    CHECK(p.degree() == 4);
    CHECK(p.str() == "2*x^4 + 1");
    CHECK(UniPoly{Rational(0), Rational(-1, 2)}.str() == "-1/2*x");
    CHECK(UniPoly().degree() == -1);
    CHECK(UniPoly().str() == "0");
    CHECK_THROWS(UniPoly().lead());
  }

  TEST_CASE("products and substitutions agree with the naive oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_poly(rng, static_cast<int>(rng() % 6));
      auto b = random_poly(rng, static_cast<int>(rng() % 6));
      CHECK(oracle::from(a * b) == oracle::mul(oracle::from(a), oracle::from(b)));
      CHECK(oracle::from(a + b) == oracle::add(oracle::from(a), oracle::from(b)));
      Rational x(static_cast<long>(rng() % 7) - 3, 2);
      CHECK(a.compose(b).eval(x) == a.eval(b.eval(x)));
      CHECK(a.affine_substitute(Rational(3), Rational(-1)).eval(x) == a.eval(Rational(3) * x - Rational(1)));
      CHECK(a.substitute_power(3).eval(x) == a.eval(x.pow(3)));
    }
  }

  TEST_CASE("division with remainder") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_poly(rng, static_cast<int>(rng() % 8));
      auto b = random_poly(rng, static_cast<int>(rng() % 4));
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS(exact_quotient(poly("x^2+1"), poly("x")));
    CHECK(exact_quotient(poly("x^2-1"), poly("x-1")) == poly("x+1"));
  }

  TEST_CASE("gcd divides both inputs and the Bezout identity holds") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
      auto c = random_poly(rng, static_cast<int>(rng() % 3));
      auto a = random_poly(rng, static_cast<int>(rng() % 4)) * c;
      auto b = random_poly(rng, static_cast<int>(rng() % 4)) * c;
      auto g = gcd(a, b);
      CHECK(g.is_monic());
      CHECK(divides(g, a));
      CHECK(divides(g, b));
      CHECK(divides(c.monic(), g));
      auto eg = extended_gcd(a, b);
      CHECK(eg.gcd == g);
      CHECK(eg.s * a + eg.t * b == g);
    }
  }

  TEST_CASE("squarefree decomposition examples") {
    auto d1 = squarefree_decomposition(poly("x^2"));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].factor == poly("x"));
    CHECK(d1[0].multiplicity == 2);

    auto d2 = squarefree_decomposition(poly("x^4-1"));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].factor == poly("x^4-1"));
    CHECK(d2[0].multiplicity == 1);

    auto d3 = squarefree_decomposition(poly("4*x^4*(x^4+1)"));
    REQUIRE(d3.size() == 2);
    CHECK(d3[0].factor == poly("x^4+1"));
    CHECK(d3[0].multiplicity == 1);
    CHECK(d3[1].factor == poly("x"));
    CHECK(d3[1].multiplicity == 4);
    CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), InvalidInput);
  }

  TEST_CASE("squarefree decomposition reconstructs its input") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      UniPoly p = UniPoly::constant(Rational(static_cast<long>(rng() % 5) + 1));
      for (int f = 0; f < 3; ++f) p *= random_poly(rng, 1 + static_cast<int>(rng() % 2), 3).pow(1 + static_cast<unsigned>(rng() % 3));
      auto d = squarefree_decomposition(p);
      UniPoly rebuilt = UniPoly::constant(p.lead());
      int last = 0;
      for (const auto& [f, m] : d) {
        CHECK(f.is_monic());
        CHECK(is_squarefree(f));
        CHECK(m > last);
        last = m;
        rebuilt *= f.pow(static_cast<unsigned>(m));
      }
      CHECK(rebuilt == p);
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) CHECK(gcd(d[i].factor, d[j].factor).degree() == 0);
    }
  }

  TEST_CASE("resultant examples and the descending Sylvester convention") {
    CHECK(resultant(poly("x-1"), poly("x+1")) == Rational(2));
    CHECK(resultant(poly("x^2"), poly("x+1")) == Rational(1));
    // Determinant of [[1,0,-2],[2,0,0],[0,2,0]]; lead(p)^deg q * prod q(roots) = 2*sqrt2 * (-2*sqrt2).
    CHECK(resultant(poly("x^2-2"), poly("2*x")) == Rational(-8));
  }

  TEST_CASE("resultant agrees with the product over known roots") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<mpq_class> roots;
      oracle::Coeffs p{1};
      int deg = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < deg; ++i) {
        const mpq_class r = oracle::frac(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
        roots.push_back(r);
        p = oracle::mul(p, oracle::Coeffs{-r, 1});
      }
      mpq_class lead(static_cast<long>(rng() % 4) + 1);
      for (auto& c : p) c *= lead;
      auto q = random_poly(rng, static_cast<int>(rng() % 4));
      CHECK(resultant(oracle::to_poly(p), q).raw() == oracle::resultant_from_roots(lead, roots, oracle::from(q)));
    }
  }

  TEST_CASE("resultant is multiplicative and vanishes on common roots") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 60; ++trial) {
      auto p = random_poly(rng, 1 + static_cast<int>(rng() % 3));
      auto q1 = random_poly(rng, 1 + static_cast<int>(rng() % 3));
      auto q2 = random_poly(rng, 1 + static_cast<int>(rng() % 3));
      CHECK(resultant(p, q1 * q2) == resultant(p, q1) * resultant(p, q2));
      CHECK(resultant(p * q1, q1 * q2).is_zero());
    }
  }

  TEST_CASE("Bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      Matrix<Rational> m(3, std::vector<Rational>(3));
      for (auto& row : m)
        for (auto& e : row) e = Rational(static_cast<long>(rng() % 7) - 3);
      Rational cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      CHECK(bareiss_determinant(m) == cof);
    }
  }

  TEST_CASE("matrix rank matches elimination with fractions") {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      Matrix<Rational> m(rows, std::vector<Rational>(cols));
      std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          long v = static_cast<long>(rng() % 5) - 2;
          m[i][j] = Rational(v, 1 + static_cast<long>(j));
          q[i][j] = oracle::frac(v, 1 + static_cast<long>(j));
        }
      // Force dependencies now and then.
      if (rows > 2 && trial % 3 == 0) {
        for (std::size_t j = 0; j < cols; ++j) {
          m[2][j] = m[0][j] + m[1][j];
          q[2][j] = q[0][j] + q[1][j];
        }
      }
      CHECK(matrix_rank(m) == oracle::rank_by_fractions(q));
    }
  }
}

TEST_SUITE("laurent") {
  TEST_CASE("square root polynomial part examples") {
    CHECK(laurent_sqrt_polypart(poly("x^2-2")) == poly("x"));
    CHECK(laurent_sqrt_polypart(poly("x^4+1")) == poly("x^2"));
    CHECK(laurent_sqrt_polypart(poly("x^4+2*x")) == poly("x^2"));
    CHECK(laurent_sqrt_polypart(poly("x^4+4*x^3+1")) == poly("x^2+2*x-2"));
    CHECK_THROWS_AS(laurent_sqrt_polypart(poly("x^3+1")), InvalidInput);
    CHECK_THROWS_AS(laurent_sqrt_polypart(poly("2*x^2+1")), InvalidInput);
  }

  TEST_CASE("square root polynomial part satisfies its bound on random monic input") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      int g = static_cast<int>(rng() % 4);
      auto R = random_poly(rng, 2 * g + 1) + UniPoly::monomial(1, static_cast<unsigned>(2 * g + 2));
      auto Y = laurent_sqrt_polypart(R);
      CHECK(Y.degree() == g + 1);
      CHECK(Y.is_monic());
      CHECK((R - Y * Y).degree() <= g);
      // Uniqueness: any other monic Y' of degree g+1 differing from Y breaks the bound.
      auto Y2 = Y + UniPoly::monomial(1, static_cast<unsigned>(rng() % static_cast<unsigned>(g + 1)));
      CHECK((R - Y2 * Y2).degree() > g);
    }
  }

  TEST_CASE("series arithmetic tracks precision") {
    auto a = LaurentTail::from_poly(poly("x^2+1"), 4);
    CHECK(a.top_degree() == 2);
    CHECK(a.lowest_known() == -1);
    auto s = a.sqrt();
    // sqrt(x^2 + 1) = x + 1/2 x^-1 - 1/8 x^-3 + ...
    CHECK(s.coeff(1) == Rational(1));
    CHECK(s.coeff(0) == Rational(0));
    CHECK(s.coeff(-1) == Rational(1, 2));
    CHECK_THROWS_AS(s.coeff(-10), PrecisionExhausted);
    auto sq = s * s;
    CHECK(sq.coeff(2) == Rational(1));
    CHECK(sq.coeff(0) == Rational(1));
    CHECK_THROWS_AS(LaurentTail::from_poly(poly("x^3"), 4).sqrt(), InvalidInput);
  }

  TEST_CASE("polynomial part refuses to guess missing coefficients") {
    auto a = LaurentTail::from_poly(poly("x^6+1"), 3);
    CHECK_THROWS_AS(a.polynomial_part(), PrecisionExhausted);
  }
}

TEST_SUITE("multipoly") {
  TEST_CASE("expansion and substitution") {
    std::vector<std::string> vars{"a", "b"};
    auto a = MultiPoly::variable(vars, 0);
    auto b = MultiPoly::variable(vars, 1);
    auto p = (a + b).pow(2);
    CHECK(p.coefficient({1, 1}) == Rational(2));
    CHECK(p.total_degree() == 2);
    CHECK(p.str() == "a^2 + 2*a*b + b^2");
    CHECK(p.substitute(1, a) == a.pow(2) * Rational(4));
    CHECK(p.coefficient_of(0, 1) == b * Rational(2));
    CHECK((p - p).is_zero());
  }
}
