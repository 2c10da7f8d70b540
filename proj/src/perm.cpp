#include "abelpell/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "abelpell/errors.hpp"

namespace abel {

Perm::Perm(int n) {
  if (n < 1 || n > 255) throw InvalidInput("permutation size must be between 1 and 255");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidInput("not a bijection");
    seen[v] = true;
  }
  if (images_.empty()) throw InvalidInput("empty permutation");
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n || to < 1 || to > n) throw InvalidInput("cycle entry out of range");
      if (used[static_cast<std::size_t>(from - 1)]) throw InvalidInput("cycles are not disjoint");
      used[static_cast<std::size_t>(from - 1)] = true;
      p.images_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
    }
  }
  return p;
}

Perm Perm::transposition(int n, int i, int j) {
  if (i == j) throw InvalidInput("transposition needs two distinct points");
  return from_cycles(n, {{i, j}});
}

Perm Perm::canonical_cycle(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
  return p;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw InvalidInput("permutation sizes differ");
  Perm r = p;
  for (auto& v : r.images_) v = q.images_[v];
  return r;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm Perm::conjugate_by(const Perm& h) const { return h.inverse() * *this * h; }

Perm Perm::commutator(const Perm& x, const Perm& y) { return x * y * x.inverse() * y.inverse(); }

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Perm::is_involution() const { return (*this * *this).is_identity(); }

bool Perm::is_transposition() const { return is_involution() && fixed_points() == size() - 2; }

bool Perm::is_full_cycle() const {
  auto t = cycle_type();
  return t.size() == 1;
}

int Perm::fixed_points() const {
  int f = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) f += images_[i] == i;
  return f;
}

Partition Perm::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return make_partition(std::move(parts));
}

std::string Perm::str() const {
  if (is_identity()) return "e";
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

std::vector<Perm> all_perms(int n) {
  Perm id(n);
  std::vector<std::uint8_t> img = id.images();
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

namespace {

void involutions_from(std::vector<std::uint8_t>& img, std::size_t i, std::vector<Perm>& out) {
  while (i < img.size() && img[i] != 0xFF) ++i;
  if (i == img.size()) {
    out.emplace_back(img);
    return;
  }
  img[i] = static_cast<std::uint8_t>(i);
  involutions_from(img, i + 1, out);
  for (std::size_t j = i + 1; j < img.size(); ++j) {
    if (img[j] != 0xFF) continue;
    img[i] = static_cast<std::uint8_t>(j);
    img[j] = static_cast<std::uint8_t>(i);
    involutions_from(img, i + 1, out);
    img[j] = 0xFF;
  }
  img[i] = 0xFF;
}

}  // namespace

std::vector<Perm> all_involutions(int n) {
  if (n < 1 || n > 254) throw InvalidInput("permutation size out of range");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n), 0xFF);
  std::vector<Perm> out;
  involutions_from(img, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> all_transpositions(int n) {
  std::vector<Perm> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(Perm::transposition(n, i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace abel
