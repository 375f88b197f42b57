#pragma once

#include <vector>

#include "orbitgames/group.hpp"
#include "orbitgames/topology.hpp"

namespace orbitgames {

/// Blocks sorted by their least member.
using Partition = std::vector<SmallSet>;

/// Index of the block containing x, or -1.
int block_of(const Partition& p, int x);

/// A group acting on a finite space by table(g, x) = g·x.
class GroupAction {
public:
  GroupAction() = default;
  /// table[g][x] = g·x. Shape and ranges are checked (std::invalid_argument).
  GroupAction(TopGroup group, FiniteSpace space, std::vector<std::vector<int>> table);

  /// Every element acts as the identity.
  static GroupAction trivial_on(TopGroup group, FiniteSpace space);

  const TopGroup& group() const { return group_; }
  const FiniteSpace& space() const { return space_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int apply(int g, int x) const { return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  SmallSet image(int g, SmallSet a) const;
  /// {g·x : g in elements}
  SmallSet translates(SmallSet elements, int x) const;
  SmallSet orbit(int x) const { return translates(group_.elements(), x); }

  Partition orbit_partition() const;

  /// Violations of the space, group and action invariants.
  ValidationReport validate() const;
  /// Throws InvalidInstance unless validate() is empty.
  void require_valid() const;

  bool operator==(const GroupAction&) const = default;

private:
  TopGroup group_;
  FiniteSpace space_;
  std::vector<std::vector<int>> table_;
};

}  // namespace orbitgames
