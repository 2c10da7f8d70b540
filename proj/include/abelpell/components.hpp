#ifndef ABELPELL_COMPONENTS_HPP
#define ABELPELL_COMPONENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelpell/perm.hpp"
#include "abelpell/ramspec.hpp"

namespace abel {

// (sigma, sigma_1 .. sigma_g, tau) with product sigma * sigma_1 * ... * tau = (1 2 ... n).
struct MonodromyTuple {
  Perm sigma;
  std::vector<Perm> middles;
  Perm tau;

  int order() const { return sigma.size(); }
  int genus() const { return static_cast<int>(middles.size()); }
  // a_1 = sigma, a_2 .. a_(g+1) = middles, a_(g+2) = tau.
  std::vector<Perm> elements() const;
  static MonodromyTuple from_elements(const std::vector<Perm>& a);
  Perm product() const;
  std::vector<std::string> violations() const;
  bool is_valid() const { return violations().empty(); }
  std::string str() const;

  friend bool operator==(const MonodromyTuple&, const MonodromyTuple&) = default;
};

// Least packed image sequence over the n conjugates by powers of the canonical cycle.
struct CanonicalKey {
  int genus = 0;
  int order = 0;
  std::vector<std::uint8_t> packed;  // images of a_1, ..., a_(g+2), 0-based

  MonodromyTuple tuple() const;
  std::string str() const;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const MonodromyTuple& t);

struct EnumerationOptions {
  unsigned threads = 0;         // 0: hardware concurrency
  double budget = 2.0e9;        // cap on involutions * C(n,2)^g
};

struct Enumeration {
  int genus = 0;
  int order = 0;
  bool feasible = false;
  double search_size = 0;           // involutions * C(n,2)^g
  std::uint64_t tuples_with_product_c = 0;
  std::vector<CanonicalKey> keys;   // sorted, distinct
};

// Search-space estimate involutions(n) * C(n,2)^g.
double enumeration_size(int g, int n);
bool enumeration_feasible(int g, int n);

Enumeration enumerate_tuples(int g, int n, const EnumerationOptions& opt = {});
// Sorted canonical keys; empty when (g, n) is infeasible. Throws ResourceLimit past the budget.
std::vector<CanonicalKey> enumerate_m(int g, int n, const EnumerationOptions& opt = {});

struct Move {
  enum class Kind { swap, left_turn, right_turn, flip };
  Kind kind = Kind::swap;
  int index = 0;  // for swap_i, 1 <= i < g

  std::string str() const;
  static Move parse(std::string_view text);
  friend bool operator==(const Move&, const Move&) = default;
};

bool move_applicable(const Move& m, int genus);
// Throws InvalidInput if the move does not apply at this genus.
MonodromyTuple apply_move(const MonodromyTuple& t, const Move& m);

enum class Variant { split, nonsplit };
std::string_view variant_name(Variant v);

// Moves generating the relations: swaps and turns, plus flip for nonsplit.
std::vector<Move> moves_for(int genus, Variant v);

struct OrbitCertificate {
  int genus = 0;
  int order = 0;
  Variant variant = Variant::nonsplit;
  std::uint64_t m_count = 0;
  int component_count = 0;
  std::vector<CanonicalKey> representatives;  // least key of each component, sorted
  std::vector<std::uint64_t> orbit_sizes;     // aligned with representatives
  std::uint64_t moves_applied = 0;
  std::uint64_t moves_valid = 0;              // output valid with exact product c
  std::uint64_t tuples_with_product_c = 0;
  double search_size = 0;
};

struct ComponentOptions {
  EnumerationOptions enumeration;
  // Processes keys and moves in a shuffled order when set.
  std::optional<std::uint64_t> shuffle_seed;
};

OrbitCertificate component_count(int g, int n, Variant v, const ComponentOptions& opt = {});

RamSpec tuple_ramspec(const MonodromyTuple& t);

}  // namespace abel

#endif  // ABELPELL_COMPONENTS_HPP
