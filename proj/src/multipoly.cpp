#include "abelpell/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "abelpell/errors.hpp"

namespace abel {

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MultiPoly p(std::move(variables));
  if (index >= p.vars_.size()) throw InvalidInput("variable index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree_in(std::size_t index) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(index));
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw InvalidInput("exponent vector length does not match the variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw InvalidInput("multivariate polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::size_t index, const MultiPoly& value) const {
  check_compatible(value);
  MultiPoly out(vars_);
  std::vector<MultiPoly> powers{constant(vars_, 1)};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[index]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[index] = 0;
    MultiPoly mono(vars_);
    mono.add_term(rest, c);
    out += mono * powers[e[index]];
  }
  return out;
}

MultiPoly MultiPoly::coefficient_of(std::size_t index, unsigned k) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(index) != k) continue;
    Exponents rest = e;
    rest[index] = 0;
    out.add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::extend(const std::vector<std::string>& variables) const {
  if (variables.size() < vars_.size() || !std::equal(vars_.begin(), vars_.end(), variables.begin())) {
    throw InvalidInput("extension variable list must start with the current variables");
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents longer = e;
    longer.resize(variables.size(), 0);
    out.add_term(longer, c);
  }
  return out;
}

MultiPoly MultiPoly::restrict_to(std::size_t count) const {
  if (count > vars_.size()) throw InvalidInput("restriction to more variables than present");
  MultiPoly out(std::vector<std::string>(vars_.begin(), vars_.begin() + static_cast<long>(count)));
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = count; i < e.size(); ++i) {
      if (e[i] != 0) throw InvalidInput("variable " + vars_[i] + " still occurs");
    }
    out.add_term(Exponents(e.begin(), e.begin() + static_cast<long>(count)), c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    unsigned dx = std::accumulate(x.first.begin(), x.first.end(), 0U);
    unsigned dy = std::accumulate(y.first.begin(), y.first.end(), 0U);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
    if (constant_term) {
      os << mag.str();
      continue;
    }
    bool need_star = false;
    if (!mag.is_one()) {
      os << mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace abel
