#pragma once

#include <string>
#include <vector>

#include "orbitgames/small_set.hpp"
#include "orbitgames/validation.hpp"

namespace orbitgames {

/// A finite group with a descending chain of identity neighbourhoods.
///
/// The chain V_0 = G ⊇ V_1 ⊇ ... ⊇ V_m stands in for a neighbourhood basis
/// of the identity. The group is Hausdorff iff V_m = {identity}.
class TopGroup {
public:
  TopGroup() = default;
  /// `mult` is row-major: mult[a][b] = a*b. Shapes and ranges are checked
  /// here (std::invalid_argument); algebraic laws are left to validate().
  TopGroup(int order, std::vector<std::vector<int>> mult, int identity, std::vector<int> inverse,
           std::vector<SmallSet> filter_chain);

  static TopGroup trivial();
  static TopGroup cyclic(int n);
  /// Z2 x Z2; element 2*a+b stands for (a,b).
  static TopGroup klein();
  /// S3 with elements listed as permutations of {0,1,2} in lexicographic order.
  static TopGroup symmetric3();

  /// Same table with a different chain.
  TopGroup with_chain(std::vector<SmallSet> chain) const;

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mult(int a, int b) const { return mult_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  const std::vector<std::vector<int>>& table() const { return mult_; }
  const std::vector<int>& inverse_table() const { return inv_; }
  const std::vector<SmallSet>& filter_chain() const { return chain_; }

  SmallSet elements() const { return SmallSet::full(order_); }
  /// Last chain element V_m.
  SmallSet smallest_neighborhood() const { return chain_.back(); }
  bool is_hausdorff() const { return smallest_neighborhood() == SmallSet::singleton(identity_); }

  /// g*S
  SmallSet left_translate(int g, SmallSet s) const;
  bool is_subgroup(SmallSet s) const;

  ValidationReport validate() const;

  bool operator==(const TopGroup&) const = default;

private:
  int order_ = 0;
  std::vector<std::vector<int>> mult_;
  int identity_ = 0;
  std::vector<int> inv_;
  std::vector<SmallSet> chain_;
};

}  // namespace orbitgames
