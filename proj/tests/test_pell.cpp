#include <random>

#include "doctest.h"

#include "abelpell/errors.hpp"
#include "abelpell/pell.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abel;
using fixtures::poly;
using fixtures::triple;

namespace {

PellTriple reflect(const PellTriple& t) {
  UniPoly Q = t.Q.affine_substitute(-1, 0);
  if (Q.lead().sign() < 0) Q = -Q;
  return make_pell_triple(t.P.affine_substitute(-1, 0), Q, t.R.affine_substitute(-1, 0));
}

}  // namespace

TEST_SUITE("pell") {
  TEST_CASE("verify examples") {
    auto a = pell_verify(poly("x"), poly("1"), poly("x^2-1"));
    CHECK(a.valid);
    CHECK(a.order == 1);
    CHECK(a.genus == 0);

    auto b = pell_verify(poly("x^2"), poly("1"), poly("x^4-1"));
    CHECK(b.valid);
    CHECK(b.order == 2);
    CHECK(b.genus == 1);
    CHECK(b.in_uab);

    auto c = pell_verify(poly("x"), poly("1"), poly("x^2-2"));
    CHECK_FALSE(c.valid);
    REQUIRE(c.failures.size() == 1);
    CHECK(c.failures[0].find("= 2") != std::string::npos);
  }

  TEST_CASE("verify reports every broken invariant") {
    // P^2 - R Q^2 = 1 holds but R = x^2 is not squarefree.
    auto r = pell_verify(poly("1"), poly("0"), poly("x^2"));
    CHECK_FALSE(r.valid);
    CHECK(r.failures.size() >= 2);
    CHECK_FALSE(pell_verify(poly("x"), poly("1"), poly("x^3-1")).valid);
    CHECK_THROWS_AS(make_pell_triple(poly("x"), poly("1"), poly("x^2-2")), InvalidInput);
  }

  TEST_CASE("chart flags") {
    CHECK(pell_verify(poly("x^2+2*x"), poly("x+1"), poly("x^2+2*x-1")).in_wab);
    CHECK_FALSE(pell_verify(poly("x^2+2*x"), poly("x+1"), poly("x^2+2*x-1")).in_uab);
    CHECK_FALSE(pell_verify(poly("2*x^4+1"), poly("2*x^2"), poly("x^4+1")).in_wab);
    CHECK(pell_verify(poly("2*x^4+1"), poly("2*x^2"), poly("x^4+1")).in_vab);
  }

  TEST_CASE("Chebyshev family verifies exactly") {
    for (const auto& t : fixtures::chebyshev_family()) {
      CHECK(pell_verify(t.P, t.Q, t.R).valid);
      CHECK(oracle::pell_identity_by_evaluation(t.P, t.Q, t.R));
    }
  }

  TEST_CASE("continued fraction invariants on random moduli") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> c(-3, 3);
    int tested = 0;
    while (tested < 40) {
      int g = static_cast<int>(rng() % 3);
      std::vector<Rational> co;
      for (int i = 0; i <= 2 * g + 1; ++i) co.emplace_back(c(rng));
      co.emplace_back(1);
      UniPoly R(co);
      if (!is_squarefree(R)) continue;
      ++tested;
      auto cf = cf_expand(R, 6);
      for (std::size_t k = 0; k < cf.steps.size(); ++k) {
        const auto& s = cf.steps[k];
        const auto& cv = s.convergent;
        // Norm recomputed with the naive product.
        auto p = oracle::from(cv.p), q = oracle::from(cv.q), r = oracle::from(R);
        CHECK(oracle::to_poly(oracle::add(oracle::mul(p, p), oracle::mul(r, oracle::mul(q, q)), -1)) == cv.norm);
        CHECK(divides(s.surd.B, R - s.surd.A * s.surd.A));
        CHECK(cv.norm.degree() <= g);
        CHECK(cv.p.degree() >= g + 1 + static_cast<int>(k));
      }
    }
  }

  TEST_CASE("solve examples") {
    auto a = pell_solve(poly("x^2-2"), 5);
    REQUIRE(a.has_value());
    CHECK(a->P == poly("x^2-1"));
    CHECK(a->Q == poly("x"));
    CHECK(a->order == 2);
    CHECK(a->genus == 0);

    auto b = pell_solve(poly("x^2+2"), 5);
    REQUIRE(b.has_value());
    CHECK(b->P == poly("x^2+1"));
    CHECK(b->Q == poly("x"));

    CHECK_FALSE(pell_solve(poly("x^4+x+1"), 10).has_value());

    auto c = pell_solve(poly("x^4+1"), 10);
    REQUIRE(c.has_value());
    CHECK(c->P == poly("2*x^4+1"));
    CHECK(c->Q == poly("2*x^2"));

    auto d = pell_solve(poly("x^2-1"), 3);
    REQUIRE(d.has_value());
    CHECK(d->P == poly("x"));
  }

  TEST_CASE("solve bounds") {
    CHECK_THROWS_AS(pell_solve(poly("x^4+1"), 1), InvalidInput);
    CHECK_THROWS_AS(pell_solve(poly("x^3+1"), 5), InvalidInput);
    CHECK_THROWS_AS(pell_solve(poly("x^2"), 5), InvalidInput);
    CHECK_THROWS_AS(pell_solve(poly("2*x^2+1"), 5), InvalidInput);
    // Order 4 is out of reach with n_max = 3.
    CHECK_FALSE(pell_solve(poly("x^4+1"), 3).has_value());
  }

  TEST_CASE("solver outputs are found again by the solver after any power") {
    for (const auto& t : fixtures::core_family()) {
      auto s = pell_solve(t.R, t.order);
      REQUIRE(s.has_value());
      CHECK(s->order <= t.order);
      CHECK(t.order % s->order == 0);
      CHECK(pell_power(*s, static_cast<unsigned>(t.order / s->order)) == t);
    }
  }

  TEST_CASE("search provenance") {
    auto s = pell_search(poly("x^2-2"), 5);
    REQUIRE(s.unit.has_value());
    CHECK(s.unit->p == poly("x"));
    CHECK(s.unit->norm == Rational(2));
    CHECK(s.unit_squared);
    auto none = pell_search(poly("x^4+x+1"), 10);
    CHECK_FALSE(none.triple.has_value());
    CHECK(none.max_degree_examined <= 10);
    CHECK(none.convergents_examined == 9);
  }

  TEST_CASE("compose examples") {
    auto t = triple("x^2-1", "x", "x^2-2");
    auto c = pell_compose(t, t);
    CHECK(c.P == poly("2*x^4-4*x^2+1"));
    CHECK(c.Q == poly("2*x^3-2*x"));
    CHECK(c.order == 4);
    CHECK(pell_compose(t, identity_triple(t.R)) == t);
    CHECK(pell_compose(identity_triple(t.R), t) == t);

    auto u = triple("x^2+1", "x", "x^2+2");
    auto d = pell_compose(u, u);
    CHECK(d.P == poly("2*x^4+4*x^2+1"));
    CHECK(d.Q == poly("2*x^3+2*x"));

    CHECK_THROWS_AS(pell_compose(t, u), InvalidInput);
  }

  TEST_CASE("powers of minimal solutions have order k n") {
    for (const char* R : {"x^2-2", "x^2+2", "x^2-1", "x^4-1", "x^4+1"}) {
      auto s = pell_solve(poly(R), 10);
      REQUIRE(s.has_value());
      for (unsigned k = 1; k <= 5; ++k) {
        auto p = pell_power(*s, k);
        CHECK(pell_verify(p.P, p.Q, p.R).valid);
        CHECK(p.order == static_cast<int>(k) * s->order);
        CHECK(oracle::pell_identity_by_evaluation(p.P, p.Q, p.R));
      }
    }
  }

  TEST_CASE("powers over x^2 - 1 reproduce the Chebyshev recurrence") {
    auto s = *pell_solve(poly("x^2-1"), 2);
    auto family = fixtures::chebyshev_family();
    for (unsigned k = 1; k <= 10; ++k) CHECK(pell_power(s, k) == family[k - 1]);
  }

  TEST_CASE("inverse unit composes to the identity") {
    auto t = triple("x^2", "1", "x^4-1");
    auto inv = make_pell_triple(t.P, -t.Q, t.R);
    auto id = pell_compose(t, inv);
    CHECK(id.order == 0);
    CHECK(id.P == UniPoly::constant(1));
  }

  TEST_CASE("normalize examples") {
    auto a = normalize(poly("x^2-1"), poly("x"), poly("x^2-2"), Chart::uAb);
    REQUIRE(std::holds_alternative<Normalized>(a));
    CHECK(std::get<Normalized>(a).triple == triple("x^2-1", "x", "x^2-2"));

    auto b = normalize(poly("2*x^4+1"), poly("2*x^2"), poly("x^4+1"), Chart::wAb);
    REQUIRE(std::holds_alternative<RadicalObstruction>(b));
    CHECK(std::get<RadicalObstruction>(b).root_degree == 4);
    CHECK(std::get<RadicalObstruction>(b).describe().find("4th root of 2") != std::string::npos);

    auto c = normalize(poly("x^2+2*x"), poly("x+1"), poly("x^2+2*x-1"), Chart::uAb);
    REQUIRE(std::holds_alternative<Normalized>(c));
    const auto& nc = std::get<Normalized>(c);
    CHECK(nc.triple == triple("x^2-1", "x", "x^2-2"));
    CHECK(nc.transform.b == Rational(-1));

    // R = (x^2+x)^2 - 1: the shift by -1/2 clears the next-to-top coefficient of R.
    auto d = normalize(poly("x^2+x"), poly("1"), poly("(x^2+x)^2-1"), Chart::uAb);
    REQUIRE(std::holds_alternative<Normalized>(d));
    const auto& nd = std::get<Normalized>(d);
    CHECK(nd.triple == triple("x^2-1/4", "1", "x^4-1/2*x^2-15/16"));
    CHECK(nd.transform.b == Rational(-1, 2));

    CHECK_THROWS_AS(normalize(poly("x"), poly("1"), poly("x^2-2"), Chart::uAb), InvalidInput);
  }

  TEST_CASE("normalize undoes random affine changes of chart") {
    std::mt19937_64 rng(42);
    const std::vector<PellTriple> bases{triple("x^2-1", "x", "x^2-2"), triple("x^2", "1", "x^4-1"),
                                        triple("x^3+1", "x", "x^4+2*x"), triple("x^4-1", "x^2", "x^4-2")};
    for (int trial = 0; trial < 40; ++trial) {
      const auto& t = bases[rng() % bases.size()];
      // x -> (x - b)/a with a = c^-1, so that the leading coefficient of P becomes c^n.
      Rational c(static_cast<long>(rng() % 3) + 1, static_cast<long>(rng() % 2) + 1);
      if (rng() % 2) c = -c;
      Rational shift(static_cast<long>(rng() % 7) - 3, 2);
      UniPoly P = t.P.affine_substitute(c, shift);
      Rational mu = c.pow(static_cast<unsigned>(t.genus + 1));
      UniPoly Q = t.Q.affine_substitute(c, shift) * mu;
      UniPoly R = t.R.affine_substitute(c, shift) * (mu * mu).inverse();
      REQUIRE(pell_verify(P, Q, R).valid);
      auto res = normalize(P, Q, R, Chart::uAb);
      REQUIRE(std::holds_alternative<Normalized>(res));
      const auto& out = std::get<Normalized>(res).triple;
      CHECK(out.chart == Chart::uAb);
      CHECK(oracle::pell_identity_by_evaluation(out.P, out.Q, out.R));
      // The uAb representative is unique up to x -> -x when n is even.
      CHECK((out == t || out == reflect(t)));
    }
  }

  TEST_CASE("inflate examples") {
    auto a = inflate(triple("x^2-1", "x", "x^2-2"), 2, InflateCase::divides_g_plus_1);
    CHECK(a.P == poly("x^4-1"));
    CHECK(a.Q == poly("x^2"));
    CHECK(a.R == poly("x^4-2"));
    CHECK(a.genus == 1);
    CHECK(a.order == 4);

    auto b = inflate(triple("x+1", "1", "x^2+2*x"), 3, InflateCase::odd);
    CHECK(b.P == poly("x^3+1"));
    CHECK(b.Q == poly("x"));
    CHECK(b.R == poly("x^4+2*x"));
    CHECK(b.genus == 1);
    CHECK(b.order == 3);

    auto c = inflate(triple("x+1", "1", "x^2+2*x"), 2, InflateCase::even_half);
    CHECK(c.P == poly("x^2+1"));
    CHECK(c.Q == poly("x"));
    CHECK(c.R == poly("x^2+2"));
    CHECK(c.genus == 0);
    CHECK(c.order == 2);
    CHECK(c == *pell_solve(poly("x^2+2"), 20));
  }

  TEST_CASE("inflate rejects inapplicable cases") {
    auto b = triple("x+1", "1", "x^2+2*x");
    CHECK_THROWS_AS(inflate(b, 1, InflateCase::odd), InvalidInput);
    CHECK_THROWS_AS(inflate(b, 2, InflateCase::odd), InvalidInput);
    CHECK_THROWS_AS(inflate(b, 3, InflateCase::even_half), InvalidInput);
    CHECK_THROWS_AS(inflate(triple("x^2-1", "x", "x^2-2"), 3, InflateCase::odd), InvalidInput);
    CHECK_THROWS_AS(inflate(triple("2*x^4+1", "2*x^2", "x^4+1"), 2, InflateCase::divides_g_plus_1), InvalidInput);
    CHECK(parse_inflate_case("3") == InflateCase::odd);
    CHECK_THROWS_AS(parse_inflate_case("four"), InvalidInput);
  }

  TEST_CASE("inflation outputs satisfy the genus relations") {
    auto a = triple("x^2-1", "x", "x^2-2");
    auto b = triple("x+1", "1", "x^2+2*x");
    for (int m = 2; m <= 5; ++m) {
      auto t = inflate(a, m, InflateCase::divides_g_plus_1);
      CHECK(t.genus + 1 == m * (a.genus + 1));
      CHECK(oracle::pell_identity_by_evaluation(t.P, t.Q, t.R));
      auto u = inflate(b, m, m % 2 == 0 ? InflateCase::even_half : InflateCase::odd);
      CHECK(oracle::pell_identity_by_evaluation(u.P, u.Q, u.R));
      CHECK(u.order == m);
    }
  }
}
