#include "abelpell/strata.hpp"

#include <string>

#include "abelpell/errors.hpp"
#include "abelpell/linalg.hpp"

namespace abel {

TruncatedRing::TruncatedRing(int k) : k_(k) {
  if (k < 1) throw InvalidInput("nilpotency order must be at least 1");
}

UniPoly TruncatedRing::reduce(const UniPoly& x) const {
  if (x.degree() < k_) return x;
  auto c = x.coefficients();
  return UniPoly(std::vector<Rational>(c.begin(), c.begin() + k_));
}

UniPoly TruncatedRing::mul(const UniPoly& x, const UniPoly& y) const { return reduce(x * y); }

UniPoly TruncatedRing::power_of_generator(int i) const {
  return i >= k_ ? UniPoly() : UniPoly::monomial(1, static_cast<unsigned>(i));
}

std::vector<UniPoly> geometric_sum(const TruncatedRing& ring, int n) {
  std::vector<UniPoly> out;
  for (int i = 0; i <= 2 * n; ++i) out.push_back(ring.power_of_generator(i));
  return out;
}

std::vector<UniPoly> truncated_sqrt_top(const TruncatedRing& ring, const std::vector<UniPoly>& square, int n) {
  if (square.empty() || square[0] != UniPoly::constant(1)) throw InvalidInput("leading coefficient must be 1");
  std::vector<UniPoly> y{UniPoly::constant(1)};
  const Rational half(1, 2);
  for (int j = 1; j <= n; ++j) {
    UniPoly acc = j < static_cast<int>(square.size()) ? square[static_cast<std::size_t>(j)] : UniPoly();
    for (int i = 1; i < j; ++i) acc = ring.sub(acc, ring.mul(y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j - i)]));
    y.push_back(acc * half);
  }
  return y;
}

bool odd_nilpotency_check(int n, int k) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  const TruncatedRing ring(k);
  const auto c = geometric_sum(ring, n);
  const auto y = truncated_sqrt_top(ring, c, n);
  // Lower half: the whole square must match, not just the part that fixed y.
  for (int j = n + 1; j <= 2 * n; ++j) {
    UniPoly sum;
    for (int i = j - n; i <= n; ++i) sum = ring.add(sum, ring.mul(y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j - i)]));
    if (sum != c[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

namespace {

std::vector<std::string> sigma_variables(std::size_t m, bool with_s) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= m; ++i) v.push_back("a_" + std::to_string(i));
  if (with_s) v.push_back("s");
  return v;
}

void check_exponents(const std::vector<int>& exponents) {
  if (exponents.empty()) throw InvalidInput("need at least one exponent");
  for (int e : exponents) {
    if (e < 2) throw InvalidInput("every exponent must be at least 2");
  }
}

}  // namespace

MultiPoly weighted_product(const std::vector<int>& exponents) {
  check_exponents(exponents);
  const std::size_t m = exponents.size();
  const auto vars = sigma_variables(m, true);
  const MultiPoly s = MultiPoly::variable(vars, m);
  MultiPoly prod = MultiPoly::constant(vars, 1);
  for (std::size_t i = 0; i < m; ++i) {
    prod = prod * (s - MultiPoly::variable(vars, i)).pow(static_cast<unsigned>(exponents[i] - 1));
  }
  return prod;
}

WeightedSymmetricSystem weighted_sigma(const std::vector<int>& exponents) {
  const MultiPoly prod = weighted_product(exponents);
  const std::size_t m = exponents.size();
  WeightedSymmetricSystem sys;
  sys.exponents = exponents;
  for (int e : exponents) sys.e += e - 1;
  sys.variables = sigma_variables(m, false);

  const auto full = sigma_variables(m, true);
  const MultiPoly s = MultiPoly::variable(full, m);
  MultiPoly rebuilt = s.pow(static_cast<unsigned>(sys.e));
  for (int j = 1; j <= sys.e; ++j) {
    MultiPoly coefficient = prod.coefficient_of(m, static_cast<unsigned>(sys.e - j));
    if (j % 2 != 0) coefficient = -coefficient;
    rebuilt = rebuilt + ((j % 2 != 0) ? -coefficient : coefficient) * s.pow(static_cast<unsigned>(sys.e - j));
    sys.generators.push_back(coefficient.restrict_to(m));
  }
  if (prod.coefficient_of(m, static_cast<unsigned>(sys.e)) != MultiPoly::constant(full, 1) || rebuilt != prod) {
    throw std::logic_error("weighted symmetric identity failed on re-expansion");
  }
  return sys;
}

bool nilpotence_identity_check(const WeightedSymmetricSystem& sys, std::size_t i) {
  if (i < 1 || i > sys.exponents.size()) throw InvalidInput("variable index out of range");
  if (sys.exponents[i - 1] < 2) throw InvalidInput("exponent at the chosen index must be at least 2");
  const MultiPoly a = MultiPoly::variable(sys.variables, i - 1);
  MultiPoly sum = a.pow(static_cast<unsigned>(sys.e));
  for (int j = 1; j <= sys.e; ++j) {
    MultiPoly term = sys.generators[static_cast<std::size_t>(j - 1)] * a.pow(static_cast<unsigned>(sys.e - j));
    sum = (j % 2 != 0) ? sum - term : sum + term;
  }
  return sum.is_zero();
}

TangentRank tangent_rank(const PellTriple& t, Chart chart) {
  const VerificationReport rep = pell_verify(t.P, t.Q, t.R);
  if (!rep.valid) throw InvalidInput("tangent rank needs a valid Pell triple");
  if (chart == Chart::vAb) throw InvalidInput("tangent rank is defined on the wAb and uAb charts");
  if (chart == Chart::uAb && !rep.in_uab) throw InvalidInput("triple does not lie in chart uAb");
  if (chart == Chart::wAb && !rep.in_wab) throw InvalidInput("triple does not lie in chart wAb");

  const int n = rep.order;
  const int g = rep.genus;
  TangentRank out;
  out.chart = chart;
  out.p_variables = n;
  out.q_variables = n - g - 1;
  out.r_variables = chart == Chart::uAb ? 2 * g + 1 : 2 * g + 2;
  out.variables = out.p_variables + out.q_variables + out.r_variables;
  out.expected_corank = chart == Chart::uAb ? g : g + 1;

  // Columns are the images of the coordinate perturbations; the top coefficient
  // of P^2 - R Q^2 never moves because the tops stay fixed.
  std::vector<UniPoly> columns;
  const UniPoly twoP = t.P * Rational(2);
  const UniPoly twoRQ = t.R * t.Q * Rational(-2);
  const UniPoly QQ = t.Q * t.Q * Rational(-1);
  for (int i = 0; i < out.p_variables; ++i) columns.push_back(twoP * UniPoly::monomial(1, static_cast<unsigned>(i)));
  for (int i = 0; i < out.q_variables; ++i) columns.push_back(twoRQ * UniPoly::monomial(1, static_cast<unsigned>(i)));
  for (int i = 0; i < out.r_variables; ++i) columns.push_back(QQ * UniPoly::monomial(1, static_cast<unsigned>(i)));

  out.equations = 2 * n;
  Matrix<Rational> jac(static_cast<std::size_t>(out.equations), std::vector<Rational>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].degree() >= 2 * n) throw std::logic_error("perturbation moves the top coefficient");
    for (int r = 0; r < out.equations; ++r) jac[static_cast<std::size_t>(r)][c] = columns[c].coeff(r);
  }
  out.rank = static_cast<int>(matrix_rank(jac));
  out.corank = out.variables - out.rank;
  return out;
}

}  // namespace abel
