#include <functional>

#include "doctest.h"

#include "abelpell/errors.hpp"
#include "abelpell/strata.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abel;
using fixtures::poly;
using fixtures::triple;

namespace {

// Every list of exponents e_i >= 2 with sum (e_i - 1) <= budget.
std::vector<std::vector<int>> exponent_lists(int budget) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (!cur.empty()) out.push_back(cur);
    for (int w = 1; w <= left; ++w) {
      cur.push_back(w + 1);
      rec(left - w);
      cur.pop_back();
    }
  };
  rec(budget);
  return out;
}

// Jacobian of P^2 - R Q^2 - 1 on the free coefficients of the uAb chart, from raw vectors.
std::size_t uab_jacobian_rank(const PellTriple& t) {
  const auto P = oracle::from(t.P), Q = oracle::from(t.Q), R = oracle::from(t.R);
  const int n = t.order, g = t.genus;
  const std::size_t rows = static_cast<std::size_t>(2 * n);
  std::vector<oracle::Coeffs> columns;
  auto shifted = [](const oracle::Coeffs& c, int i) {
    oracle::Coeffs s(static_cast<std::size_t>(i), 0);
    s.insert(s.end(), c.begin(), c.end());
    return s;
  };
  const oracle::Coeffs twoP = oracle::mul({2}, P), twoRQ = oracle::mul({-2}, oracle::mul(R, Q)), QQ = oracle::mul({-1}, oracle::mul(Q, Q));
  for (int i = 0; i < n; ++i) columns.push_back(shifted(twoP, i));
  for (int i = 0; i < n - g - 1; ++i) columns.push_back(shifted(twoRQ, i));
  for (int i = 0; i < 2 * g + 1; ++i) columns.push_back(shifted(QQ, i));
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(columns.size(), 0));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < columns[c].size() && r < rows; ++r) m[r][c] = columns[c][r];
  return oracle::rank_by_fractions(m);
}

MultiPoly from_oracle(const std::vector<std::string>& vars, const std::map<oracle::Monomial, mpq_class>& terms) {
  MultiPoly p(vars);
  for (const auto& [mono, c] : terms) p.add_term(mono, Rational(c));
  return p;
}

}  // namespace

TEST_SUITE("strata") {
  TEST_CASE("truncated ring arithmetic") {
    TruncatedRing ring(3);
    CHECK(ring.power_of_generator(2) == poly("x^2"));
    CHECK(ring.power_of_generator(3).is_zero());
    CHECK(ring.mul(poly("1+x"), poly("1+x")) == poly("1+2*x+x^2"));
    CHECK(ring.mul(poly("x^2"), poly("x")).is_zero());
    CHECK(ring.reduce(poly("x^5+x")) == poly("x"));
    CHECK_THROWS_AS(TruncatedRing(0), InvalidInput);
  }

  TEST_CASE("odd nilpotency examples") {
    CHECK(odd_nilpotency_check(1, 2));
    CHECK_FALSE(odd_nilpotency_check(1, 3));
    CHECK(odd_nilpotency_check(3, 4));
    CHECK_FALSE(odd_nilpotency_check(3, 5));
    CHECK(odd_nilpotency_check(2, 1));
    CHECK_THROWS_AS(odd_nilpotency_check(0, 2), InvalidInput);
  }

  TEST_CASE("odd nilpotency is exactly k <= n+1") {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 1; k <= 2 * n + 2; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(odd_nilpotency_check(n, k) == (k <= n + 1));
        CHECK(odd_nilpotency_check(n, k) == oracle::geometric_square_by_series(n, k));
      }
    }
  }

  TEST_CASE("truncated square root squares back when it exists") {
    for (int n = 1; n <= 4; ++n) {
      TruncatedRing ring(n + 1);
      auto sq = geometric_sum(ring, n);
      REQUIRE(sq.size() == static_cast<std::size_t>(2 * n + 1));
      auto root = truncated_sqrt_top(ring, sq, n);
      REQUIRE(root.size() == static_cast<std::size_t>(n + 1));
      for (std::size_t d = 0; d < sq.size(); ++d) {
        UniPoly acc;
        for (std::size_t i = 0; i < root.size(); ++i)
          if (d >= i && d - i < root.size()) acc = ring.add(acc, ring.mul(root[i], root[d - i]));
        CHECK(acc == sq[d]);
      }
    }
  }

  TEST_CASE("weighted sigma examples") {
    auto a = weighted_sigma({2});
    CHECK(a.e == 1);
    REQUIRE(a.generators.size() == 1);
    CHECK(a.generators[0].str() == "a_1");

    auto b = weighted_sigma({2, 2});
    CHECK(b.e == 2);
    CHECK(b.generators[0].str() == "a_1 + a_2");
    CHECK(b.generators[1].str() == "a_1*a_2");

    auto c = weighted_sigma({3, 2});
    CHECK(c.e == 3);
    CHECK(c.generators[0].str() == "2*a_1 + a_2");
    CHECK(c.generators[1].str() == "a_1^2 + 2*a_1*a_2");
    CHECK(c.generators[2].str() == "a_1^2*a_2");

    CHECK(nilpotence_identity_check(a, 1));
    CHECK(nilpotence_identity_check(b, 1));
    CHECK(nilpotence_identity_check(c, 2));
    CHECK_THROWS_AS(weighted_sigma({1, 2}), InvalidInput);
    CHECK_THROWS_AS(nilpotence_identity_check(c, 3), InvalidInput);
  }

  TEST_CASE("weighted sigma matches subset enumeration up to total weight 8") {
    const auto lists = exponent_lists(8);
    CHECK(lists.size() == 255);
    for (const auto& ex : lists) {
      const auto sys = weighted_sigma(ex);
      const auto expected = oracle::weighted_elementary(ex);
      REQUIRE(sys.generators.size() == expected.size() - 1);
      for (int j = 1; j <= sys.e; ++j) {
        const MultiPoly& got = sys.generators[static_cast<std::size_t>(j - 1)];
        CHECK(got == from_oracle(got.variables(), expected[static_cast<std::size_t>(j)]));
      }
      for (std::size_t i = 1; i <= ex.size(); ++i) CHECK(nilpotence_identity_check(sys, i));
    }
  }

  TEST_CASE("a perturbed generator breaks the nilpotence identity") {
    auto sys = weighted_sigma({3, 2});
    sys.generators[0] += MultiPoly::constant(sys.variables, Rational(1));
    CHECK_FALSE(nilpotence_identity_check(sys, 1));
  }

  TEST_CASE("tangent rank examples") {
    auto a = tangent_rank(triple("x^2-1", "x", "x^2-2"));
    CHECK(a.variables == 4);
    CHECK(a.p_variables == 2);
    CHECK(a.q_variables == 1);
    CHECK(a.r_variables == 1);
    CHECK(a.rank == 4);
    CHECK(a.corank == 0);

    auto b = tangent_rank(triple("x^2+1", "x", "x^2+2"));
    CHECK(b.corank == 0);

    auto c = tangent_rank(triple("x^2", "1", "x^4-1"));
    CHECK(c.variables == 5);
    CHECK(c.p_variables == 2);
    CHECK(c.q_variables == 0);
    CHECK(c.r_variables == 3);
    CHECK(c.rank == 4);
    CHECK(c.corank == 1);

    auto w = tangent_rank(triple("x^2", "1", "x^4-1"), Chart::wAb);
    CHECK(w.corank == 2);
    CHECK(w.expected_corank == 2);
  }

  TEST_CASE("tangent rank rejects chart mismatch") {
    CHECK_THROWS_AS(tangent_rank(triple("2*x^4+1", "2*x^2", "x^4+1")), InvalidInput);
    CHECK_THROWS_AS(tangent_rank(triple("x+1", "1", "x^2+2*x")), InvalidInput);
    CHECK_THROWS_AS(tangent_rank(triple("x^2-1", "x", "x^2-2"), Chart::vAb), InvalidInput);
  }

  TEST_CASE("corank equals genus on every uAb fixture") {
    int seen = 0;
    for (const auto& t : fixtures::extended_family()) {
      if (!pell_verify(t.P, t.Q, t.R).in_uab) continue;
      CAPTURE(t.P.str());
      ++seen;
      const auto r = tangent_rank(t);
      CHECK(r.corank == t.genus);
      CHECK(static_cast<std::size_t>(r.rank) == uab_jacobian_rank(t));
    }
    CHECK(seen >= 10);
  }
}
