#ifndef ABELPELL_RAMSPEC_HPP
#define ABELPELL_RAMSPEC_HPP

#include <string>
#include <vector>

namespace abel {

// Integer partition, parts sorted in descending order.
using Partition = std::vector<int>;

Partition make_partition(std::vector<int> parts);
int partition_sum(const Partition& p);
// Sum of (e - 1) over the parts.
int ramification_of(const Partition& p);
int odd_part_count(const Partition& p);
std::string partition_str(const Partition& p);

// Abel ramification specification of order n. S consists of the two marked
// profiles over the involutive fixed points (+1, -1) followed by one partition
// per unassigned finite branch point; the profile over infinity is excluded.
struct RamSpec {
  int order = 0;
  Partition over_plus;
  Partition over_minus;
  std::vector<Partition> unassigned;

  std::vector<Partition> members() const;
  int total_ramification() const;
  // Odd parts among the two marked members, counted with multiplicity.
  int marked_odd_parts() const;
  // Empty when every invariant holds.
  std::vector<std::string> violations() const;
  void validate() const;

  friend bool operator==(const RamSpec&, const RamSpec&) = default;
};

// (t - 2) / 2 for t odd parts among the marked members.
int genus_of_ramspec(const RamSpec& spec);

// Dimension of the versal deformation space of an Abel map with this specification.
int polt_dimension(const RamSpec& spec);

}  // namespace abel

#endif  // ABELPELL_RAMSPEC_HPP
