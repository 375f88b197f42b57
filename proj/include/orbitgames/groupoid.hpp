#pragma once

#include <array>
#include <vector>

#include "orbitgames/action.hpp"
#include "orbitgames/small_set.hpp"
#include "orbitgames/topology.hpp"
#include "orbitgames/validation.hpp"

namespace orbitgames {

/// A finite groupoid with a topology on its arrows.
///
/// Objects are identified with their identity arrows, so the object set is a
/// subset of the arrows. Composition comp(a, b) = a∘b is defined exactly when
/// src(a) == rng(b).
class FiniteGroupoid {
public:
  using Triple = std::array<int, 3>;  // (a, b, a∘b)

  FiniteGroupoid() = default;
  /// Index ranges are checked here (std::invalid_argument); the groupoid laws
  /// are left to validate_groupoid().
  FiniteGroupoid(int n_arrows, SmallSet objects, std::vector<int> src, std::vector<int> rng,
                 const std::vector<Triple>& comp, std::vector<int> inv, std::vector<SmallSet> basis);

  int n_arrows() const { return n_arrows_; }
  SmallSet arrows() const { return SmallSet::full(n_arrows_); }
  SmallSet objects() const { return objects_; }
  int src(int a) const { return src_[static_cast<std::size_t>(a)]; }
  int rng(int a) const { return rng_[static_cast<std::size_t>(a)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// a∘b, or -1 when undefined.
  int comp(int a, int b) const { return comp_[static_cast<std::size_t>(a * n_arrows_ + b)]; }
  const std::vector<int>& src_table() const { return src_; }
  const std::vector<int>& rng_table() const { return rng_; }
  const std::vector<int>& inv_table() const { return inv_; }
  const std::vector<SmallSet>& basis() const { return basis_; }
  /// Defined composition entries in (a, b) order.
  std::vector<Triple> comp_triples() const;

  /// The arrows as a finite space with this basis.
  const FiniteSpace& arrow_space() const { return arrow_space_; }
  /// Objects in increasing arrow order; object ordinal i is arrow object_ids()[i].
  std::vector<int> object_ids() const { return objects_.to_vector(); }
  /// The subspace G⁰, indexed by object ordinal; its basis is the traces of the arrow basis.
  FiniteSpace object_space() const;

  /// {a∘b : a in A, b in B, composable}
  SmallSet product(SmallSet a, SmallSet b) const;

  bool operator==(const FiniteGroupoid&) const = default;

private:
  int n_arrows_ = 0;
  SmallSet objects_;
  std::vector<int> src_, rng_, inv_, comp_;
  std::vector<SmallSet> basis_;
  FiniteSpace arrow_space_;
};

ValidationReport validate_groupoid(const FiniteGroupoid& g);

/// H⋉X: arrow h*n + x stands for (h, x); its source is (1, x), its range (1, h·x).
/// The basis is every rectangle gV × U with V in the filter chain, g in the
/// group and U a basis set of the space. Throws InvalidInstance on an invalid action.
FiniteGroupoid action_groupoid(const GroupAction& action);

/// Arrow index of (h, x) in action_groupoid(action).
inline int action_arrow(const GroupAction& action, int h, int x) {
  return h * action.space().n_points() + x;
}

/// G|_X: arrows with source and range in X, renumbered in increasing order,
/// with the traces of the basis. Throws std::invalid_argument unless X ⊆ objects.
FiniteGroupoid restrict_groupoid(const FiniteGroupoid& g, SmallSet x);

/// Smallest subset O of U ∩ G⁰ containing x such that r(γ) ∈ O whenever
/// γ ∈ U, s(γ) ∈ O and r(γ) ∈ U. Throws std::invalid_argument if x ∉ U or x
/// is not an object.
SmallSet groupoid_local_orbit(const FiniteGroupoid& g, int x, SmallSet u);

/// Blocks of objects (as arrow ids) connected by an arrow, sorted by least member.
Partition groupoid_orbit_partition(const FiniteGroupoid& g);

}  // namespace orbitgames
