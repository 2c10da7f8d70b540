#ifndef ABELPELL_PERM_HPP
#define ABELPELL_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "abelpell/ramspec.hpp"

namespace abel {

// Bijection of {1..n}, stored 0-based. Products read left to right:
// (p * q)(x) = q(p(x)), so p acts first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);  // identity
  // 0-based images; throws InvalidInput unless a bijection.
  explicit Perm(std::vector<std::uint8_t> images);

  // 1-based cycles, e.g. {{1, 2}, {3, 4}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Perm transposition(int n, int i, int j);  // 1-based
  // The canonical n-cycle (1 2 ... n).
  static Perm canonical_cycle(int n);

  int size() const { return static_cast<int>(images_.size()); }
  // 1-based image.
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)] + 1; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  friend Perm operator*(const Perm& p, const Perm& q);
  Perm inverse() const;
  // h^-1 * p * h.
  Perm conjugate_by(const Perm& h) const;
  // x y x^-1 y^-1.
  static Perm commutator(const Perm& x, const Perm& y);

  bool is_identity() const;
  bool is_involution() const;
  bool is_transposition() const;
  bool is_full_cycle() const;
  int fixed_points() const;
  Partition cycle_type() const;

  // Cycle notation, "e" for the identity.
  std::string str() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

std::vector<Perm> all_involutions(int n);
std::vector<Perm> all_transpositions(int n);
std::vector<Perm> all_perms(int n);

}  // namespace abel

#endif  // ABELPELL_PERM_HPP
