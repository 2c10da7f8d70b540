#include "abelpell/ramspec.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "abelpell/errors.hpp"

namespace abel {

Partition make_partition(std::vector<int> parts) {
  for (int e : parts) {
    if (e <= 0) throw InvalidInput("partition parts must be positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int ramification_of(const Partition& p) {
  int r = 0;
  for (int e : p) r += e - 1;
  return r;
}

int odd_part_count(const Partition& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int e) { return e % 2 != 0; }));
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << "}";
  return os.str();
}

std::vector<Partition> RamSpec::members() const {
  std::vector<Partition> out{over_plus, over_minus};
  out.insert(out.end(), unassigned.begin(), unassigned.end());
  return out;
}

int RamSpec::total_ramification() const {
  int total = 0;
  for (const auto& s : members()) total += ramification_of(s);
  return total;
}

int RamSpec::marked_odd_parts() const { return odd_part_count(over_plus) + odd_part_count(over_minus); }

std::vector<std::string> RamSpec::violations() const {
  std::vector<std::string> out;
  if (order < 1) out.push_back("order must be positive");
  for (const auto& s : members()) {
    if (partition_sum(s) != order) out.push_back("member " + partition_str(s) + " does not sum to n = " + std::to_string(order));
    if (!std::is_sorted(s.begin(), s.end(), std::greater<>())) out.push_back("member " + partition_str(s) + " is not sorted");
  }
  if (total_ramification() != order - 1) {
    out.push_back("total ramification " + std::to_string(total_ramification()) + " differs from n - 1 = " +
                  std::to_string(order - 1));
  }
  int t = marked_odd_parts();
  if (t % 2 != 0 || t < 2) out.push_back("marked members have " + std::to_string(t) + " odd parts; need an even number >= 2");
  return out;
}

void RamSpec::validate() const {
  auto v = violations();
  if (v.empty()) return;
  std::string msg = "invalid ramification specification:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw InvalidInput(msg);
}

int genus_of_ramspec(const RamSpec& spec) {
  int t = spec.marked_odd_parts();
  if (t % 2 != 0) throw InvalidInput("odd number of odd parts among marked members: no hyperelliptic double cover");
  if (t < 2) throw InvalidInput("fewer than two odd parts among marked members");
  return (t - 2) / 2;
}

int polt_dimension(const RamSpec& spec) {
  int dim = 0;
  for (const auto& s : spec.unassigned) dim += ramification_of(s);
  for (const Partition* marked : {&spec.over_plus, &spec.over_minus}) {
    for (int r : *marked) dim += (r % 2 == 0) ? r / 2 - 1 : (r - 1) / 2;
  }
  return dim;
}

}  // namespace abel
