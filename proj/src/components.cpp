#include "abelpell/components.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "abelpell/errors.hpp"

namespace abel {

namespace {

std::string format_estimate(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

std::vector<Perm> MonodromyTuple::elements() const {
  std::vector<Perm> a{sigma};
  a.insert(a.end(), middles.begin(), middles.end());
  a.push_back(tau);
  return a;
}

MonodromyTuple MonodromyTuple::from_elements(const std::vector<Perm>& a) {
  if (a.size() < 2) throw InvalidInput("a monodromy tuple has at least two entries");
  return MonodromyTuple{a.front(), std::vector<Perm>(a.begin() + 1, a.end() - 1), a.back()};
}

Perm MonodromyTuple::product() const {
  Perm p = sigma;
  for (const auto& m : middles) p = p * m;
  return p * tau;
}

std::vector<std::string> MonodromyTuple::violations() const {
  std::vector<std::string> out;
  const int n = order();
  for (const auto& m : middles) {
    if (m.size() != n) {
      out.push_back("entries have different sizes");
      return out;
    }
  }
  if (tau.size() != n) {
    out.push_back("entries have different sizes");
    return out;
  }
  if (!sigma.is_involution()) out.push_back("sigma is not an involution");
  if (!tau.is_involution()) out.push_back("tau is not an involution");
  for (const auto& m : middles) {
    if (!m.is_transposition()) out.push_back("middle entry " + m.str() + " is not a transposition");
  }
  if (product() != Perm::canonical_cycle(n)) out.push_back("product is " + product().str() + ", not the canonical cycle");
  if (sigma.fixed_points() + tau.fixed_points() != 2 * genus() + 2) out.push_back("fixed points of sigma and tau do not sum to 2g + 2");
  return out;
}

std::string MonodromyTuple::str() const {
  std::string s = "(";
  auto a = elements();
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].str();
  return s + ")";
}

namespace {

// Images of the k-th conjugate by c^k, written into out.
void conjugate_packed(const std::vector<std::uint8_t>& packed, int n, int k, std::vector<std::uint8_t>& out) {
  out.resize(packed.size());
  for (std::size_t base = 0; base < packed.size(); base += static_cast<std::size_t>(n)) {
    for (int y = 0; y < n; ++y) {
      int x = (y - k + n) % n;
      out[base + static_cast<std::size_t>(y)] = static_cast<std::uint8_t>((packed[base + static_cast<std::size_t>(x)] + k) % n);
    }
  }
}

std::vector<std::uint8_t> minimal_conjugate(const std::vector<std::uint8_t>& packed, int n) {
  std::vector<std::uint8_t> best = packed;
  std::vector<std::uint8_t> scratch;
  for (int k = 1; k < n; ++k) {
    conjugate_packed(packed, n, k, scratch);
    if (scratch < best) best = scratch;
  }
  return best;
}

std::vector<std::uint8_t> pack(const std::vector<Perm>& a) {
  std::vector<std::uint8_t> out;
  for (const auto& p : a) out.insert(out.end(), p.images().begin(), p.images().end());
  return out;
}

std::string as_string(const std::vector<std::uint8_t>& v) { return std::string(v.begin(), v.end()); }

double binomial2(int n) { return n * (n - 1) / 2.0; }

double involution_count(int n) {
  double a = 1, b = 1;  // I(0), I(1)
  if (n == 0) return a;
  for (int i = 2; i <= n; ++i) {
    double c = b + (i - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Smaller index becomes the root, so the result does not depend on union order.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

MonodromyTuple CanonicalKey::tuple() const {
  const auto n = static_cast<std::size_t>(order);
  std::vector<Perm> a;
  for (std::size_t i = 0; i + n <= packed.size(); i += n) {
    a.emplace_back(std::vector<std::uint8_t>(packed.begin() + static_cast<std::ptrdiff_t>(i),
                                             packed.begin() + static_cast<std::ptrdiff_t>(i + n)));
  }
  return MonodromyTuple::from_elements(a);
}

std::string CanonicalKey::str() const { return tuple().str(); }

CanonicalKey canonical_key(const MonodromyTuple& t) {
  return CanonicalKey{t.genus(), t.order(), minimal_conjugate(pack(t.elements()), t.order())};
}

double enumeration_size(int g, int n) { return involution_count(n) * std::pow(binomial2(n), g); }

bool enumeration_feasible(int g, int n) { return g >= 0 && n >= 1 && n >= g + 1; }

Enumeration enumerate_tuples(int g, int n, const EnumerationOptions& opt) {
  if (g < 0) throw InvalidInput("genus must be nonnegative");
  if (n < 1) throw InvalidInput("order must be positive");
  Enumeration out;
  out.genus = g;
  out.order = n;
  out.feasible = enumeration_feasible(g, n);
  if (!out.feasible) return out;
  if (n > 254) throw InvalidInput("order too large for packed keys");
  out.search_size = enumeration_size(g, n);
  if (out.search_size > opt.budget) {
    throw ResourceLimit("enumeration of (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                            ") needs about " + format_estimate(out.search_size) +
                            " tuple checks",
                        out.search_size);
  }

  const auto involutions = all_involutions(n);
  const auto transpositions = all_transpositions(n);
  const Perm c = Perm::canonical_cycle(n);
  const int fix_target = 2 * g + 2;

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(involutions.size()));
  std::vector<std::vector<std::vector<std::uint8_t>>> found(threads);
  std::vector<std::uint64_t> counts(threads, 0);

  auto worker = [&](unsigned id) {
    std::vector<Perm> entries(static_cast<std::size_t>(g + 2));
    std::vector<Perm> prefix(static_cast<std::size_t>(g + 1));
    auto& local = found[id];
    auto descend = [&](auto&& self, int depth) -> void {
      if (depth == g) {
        Perm tau = prefix[static_cast<std::size_t>(g)].inverse() * c;
        if (!tau.is_involution() || entries[0].fixed_points() + tau.fixed_points() != fix_target) return;
        entries[static_cast<std::size_t>(g + 1)] = tau;
        ++counts[id];
        local.push_back(minimal_conjugate(pack(entries), n));
        return;
      }
      for (const auto& t : transpositions) {
        entries[static_cast<std::size_t>(depth + 1)] = t;
        prefix[static_cast<std::size_t>(depth + 1)] = prefix[static_cast<std::size_t>(depth)] * t;
        self(self, depth + 1);
      }
    };
    for (std::size_t s = id; s < involutions.size(); s += threads) {
      const Perm& sigma = involutions[s];
      if (sigma.fixed_points() > fix_target) continue;
      entries[0] = sigma;
      prefix[0] = sigma;
      descend(descend, 0);
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
  };

  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  for (auto& th : pool) th.join();

  std::vector<std::vector<std::uint8_t>> merged;
  for (unsigned id = 0; id < threads; ++id) {
    out.tuples_with_product_c += counts[id];
    merged.insert(merged.end(), found[id].begin(), found[id].end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  out.keys.reserve(merged.size());
  for (auto& p : merged) out.keys.push_back(CanonicalKey{g, n, std::move(p)});
  return out;
}

std::vector<CanonicalKey> enumerate_m(int g, int n, const EnumerationOptions& opt) {
  return enumerate_tuples(g, n, opt).keys;
}

std::string Move::str() const {
  switch (kind) {
    case Kind::swap: return "swap_" + std::to_string(index);
    case Kind::left_turn: return "left_turn";
    case Kind::right_turn: return "right_turn";
    case Kind::flip: return "flip";
  }
  return "?";
}

Move Move::parse(std::string_view text) {
  if (text == "left_turn") return Move{Kind::left_turn, 0};
  if (text == "right_turn") return Move{Kind::right_turn, 0};
  if (text == "flip") return Move{Kind::flip, 0};
  if (text.starts_with("swap_")) {
    std::string digits(text.substr(5));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
        digits.size() < 6) {
      return Move{Kind::swap, std::stoi(digits)};
    }
  }
  throw InvalidInput("unknown move '" + std::string(text) + "'");
}

bool move_applicable(const Move& m, int genus) {
  switch (m.kind) {
    case Move::Kind::swap: return m.index >= 1 && m.index < genus;
    case Move::Kind::left_turn:
    case Move::Kind::right_turn: return genus >= 1;
    case Move::Kind::flip: return true;
  }
  return false;
}

MonodromyTuple apply_move(const MonodromyTuple& t, const Move& m) {
  const int g = t.genus();
  if (!move_applicable(m, g)) throw InvalidInput("move " + m.str() + " does not apply at genus " + std::to_string(g));
  MonodromyTuple r = t;
  switch (m.kind) {
    case Move::Kind::swap: {
      const Perm& x = t.middles[static_cast<std::size_t>(m.index - 1)];
      const Perm& y = t.middles[static_cast<std::size_t>(m.index)];
      r.middles[static_cast<std::size_t>(m.index - 1)] = x * y * x.inverse();
      r.middles[static_cast<std::size_t>(m.index)] = x;
      break;
    }
    case Move::Kind::left_turn: {
      const Perm& s = t.sigma;
      const Perm& s1 = t.middles.front();
      r.sigma = s * Perm::commutator(s1, s);
      r.middles.front() = s * s1 * s.inverse();
      break;
    }
    case Move::Kind::right_turn: {
      const Perm& sg = t.middles.back();
      const Perm& tau = t.tau;
      r.middles.back() = tau.inverse() * sg * tau;
      r.tau = Perm::commutator(tau.inverse(), sg.inverse()) * tau;
      break;
    }
    case Move::Kind::flip: {
      const auto a = t.elements();
      const std::size_t len = a.size();
      std::vector<Perm> b(len);  // b[i] = a_1 ... a_(i), 0-based prefix before a[i]
      b[0] = Perm(t.order());
      for (std::size_t i = 1; i < len; ++i) b[i] = b[i - 1] * a[i - 1];
      std::vector<Perm> out;
      for (std::size_t i = len - 1; i >= 1; --i) out.push_back(b[i] * a[i] * b[i].inverse());
      out.push_back(a[0]);
      r = MonodromyTuple::from_elements(out);
      break;
    }
  }
  return r;
}

std::string_view variant_name(Variant v) { return v == Variant::split ? "split" : "nonsplit"; }

std::vector<Move> moves_for(int genus, Variant v) {
  std::vector<Move> out;
  for (int i = 1; i < genus; ++i) out.push_back(Move{Move::Kind::swap, i});
  if (genus >= 1) {
    out.push_back(Move{Move::Kind::left_turn, 0});
    out.push_back(Move{Move::Kind::right_turn, 0});
  }
  if (v == Variant::nonsplit) out.push_back(Move{Move::Kind::flip, 0});
  return out;
}

OrbitCertificate component_count(int g, int n, Variant v, const ComponentOptions& opt) {
  const Enumeration en = enumerate_tuples(g, n, opt.enumeration);
  OrbitCertificate cert;
  cert.genus = g;
  cert.order = n;
  cert.variant = v;
  cert.m_count = en.keys.size();
  cert.tuples_with_product_c = en.tuples_with_product_c;
  cert.search_size = en.search_size;
  if (en.keys.empty()) return cert;

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(en.keys.size());
  for (std::size_t i = 0; i < en.keys.size(); ++i) index.emplace(as_string(en.keys[i].packed), i);

  std::vector<std::size_t> order(en.keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Move> moves = moves_for(g, v);
  std::mt19937_64 rng(opt.shuffle_seed.value_or(0));
  if (opt.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

  const Perm c = Perm::canonical_cycle(n);
  UnionFind uf(en.keys.size());
  for (std::size_t i : order) {
    const MonodromyTuple t = en.keys[i].tuple();
    if (opt.shuffle_seed) std::shuffle(moves.begin(), moves.end(), rng);
    for (const auto& m : moves) {
      const MonodromyTuple moved = apply_move(t, m);
      ++cert.moves_applied;
      if (!moved.is_valid() || moved.product() != c) continue;
      auto it = index.find(as_string(canonical_key(moved).packed));
      if (it == index.end()) continue;
      ++cert.moves_valid;
      uf.unite(i, it->second);
    }
  }
  if (cert.moves_valid != cert.moves_applied) throw std::logic_error("a move left the tuple set");

  std::vector<std::uint64_t> sizes(en.keys.size(), 0);
  for (std::size_t i = 0; i < en.keys.size(); ++i) ++sizes[uf.find(i)];
  for (std::size_t i = 0; i < en.keys.size(); ++i) {
    if (uf.find(i) != i) continue;
    cert.representatives.push_back(en.keys[i]);
    cert.orbit_sizes.push_back(sizes[i]);
  }
  cert.component_count = static_cast<int>(cert.representatives.size());
  return cert;
}

RamSpec tuple_ramspec(const MonodromyTuple& t) {
  auto v = t.violations();
  if (!v.empty()) throw InvalidInput("invalid monodromy tuple: " + v.front());
  RamSpec spec;
  spec.order = t.order();
  spec.over_plus = t.sigma.cycle_type();
  spec.over_minus = t.tau.cycle_type();
  for (const auto& m : t.middles) spec.unassigned.push_back(m.cycle_type());
  std::sort(spec.unassigned.begin(), spec.unassigned.end());
  spec.validate();
  return spec;
}

}  // namespace abel
