#pragma once

#include <vector>

#include "orbitgames/small_set.hpp"
#include "orbitgames/validation.hpp"

namespace orbitgames {

/// Result of category_report.
struct PointSetReport {
  SmallSet set;
  bool is_open = false;
  bool is_closed = false;
  bool is_dense = false;
  bool is_comeager = false;
  bool is_meager = false;

  bool operator==(const PointSetReport&) const = default;
};

/// A finite topological space given by a basis.
///
/// The open sets are the unions of basis sets. Every point x has a smallest
/// open neighbourhood, its core, which determines the topology: a set is open
/// iff it contains the core of each of its points, and z is in the closure of
/// A iff core(z) meets A.
class FiniteSpace {
public:
  FiniteSpace() = default;
  /// Throws std::invalid_argument if a basis set mentions a point >= n_points.
  FiniteSpace(int n_points, std::vector<SmallSet> basis);

  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);
  /// Points {0,1}; opens {}, {1}, {0,1}.
  static FiniteSpace sierpinski();

  int n_points() const { return n_points_; }
  const std::vector<SmallSet>& basis() const { return basis_; }
  SmallSet points() const { return SmallSet::full(n_points_); }

  /// Intersection of all basis sets containing x. Throws std::out_of_range.
  SmallSet core_open(int x) const;

  SmallSet closure(SmallSet a) const;
  SmallSet interior(SmallSet a) const;
  bool is_open(SmallSet a) const;
  bool is_closed(SmallSet a) const { return is_open(points() - a); }
  bool is_dense(SmallSet a) const;
  bool is_discrete() const;

  PointSetReport category_report(SmallSet a) const;

  /// Basis sets that contain x, in basis order.
  std::vector<SmallSet> basic_neighborhoods(int x) const;

  ValidationReport validate() const;

  bool operator==(const FiniteSpace& o) const {
    return n_points_ == o.n_points_ && basis_ == o.basis_;
  }

private:
  void check_point(int x) const;
  void check_subset(SmallSet a) const;

  int n_points_ = 0;
  std::vector<SmallSet> basis_;
  std::vector<SmallSet> cores_;
};

}  // namespace orbitgames
