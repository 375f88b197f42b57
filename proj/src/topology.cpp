#include "orbitgames/topology.hpp"

#include <stdexcept>
#include <string>

namespace orbitgames {

FiniteSpace::FiniteSpace(int n_points, std::vector<SmallSet> basis)
    : n_points_(n_points), basis_(std::move(basis)) {
  check_capacity(n_points, "FiniteSpace");
  const SmallSet all = points();
  for (const auto& b : basis_)
    if (!b.subset_of(all))
      throw std::invalid_argument("FiniteSpace: basis set " + b.str() + " leaves the point set");
  cores_.assign(static_cast<std::size_t>(n_points_), all);
  for (int x = 0; x < n_points_; ++x)
    for (const auto& b : basis_)
      if (b.contains(x)) cores_[static_cast<std::size_t>(x)] &= b;
}

FiniteSpace FiniteSpace::discrete(int n) {
  std::vector<SmallSet> basis;
  for (int i = 0; i < n; ++i) basis.push_back(SmallSet::singleton(i));
  return FiniteSpace(n, std::move(basis));
}

FiniteSpace FiniteSpace::indiscrete(int n) { return FiniteSpace(n, {SmallSet::full(n)}); }

FiniteSpace FiniteSpace::sierpinski() { return FiniteSpace(2, {SmallSet{1}, SmallSet{0, 1}}); }

void FiniteSpace::check_point(int x) const {
  if (x < 0 || x >= n_points_)
    throw std::out_of_range("point " + std::to_string(x) + " outside a space of " +
                            std::to_string(n_points_) + " points");
}

void FiniteSpace::check_subset(SmallSet a) const {
  if (!a.subset_of(points())) throw std::out_of_range("set " + a.str() + " is not a set of points");
}

SmallSet FiniteSpace::core_open(int x) const {
  check_point(x);
  return cores_[static_cast<std::size_t>(x)];
}

SmallSet FiniteSpace::closure(SmallSet a) const {
  check_subset(a);
  SmallSet out;
  for (int z = 0; z < n_points_; ++z)
    if (cores_[static_cast<std::size_t>(z)].intersects(a)) out.insert(z);
  return out;
}

SmallSet FiniteSpace::interior(SmallSet a) const {
  check_subset(a);
  return points() - closure(points() - a);
}

bool FiniteSpace::is_open(SmallSet a) const {
  check_subset(a);
  bool open = true;
  a.for_each([&](int z) {
    bool covered = false;
    for (const auto& b : basis_)
      if (b.contains(z) && b.subset_of(a)) {
        covered = true;
        break;
      }
    open = open && covered;
  });
  return open;
}

bool FiniteSpace::is_dense(SmallSet a) const {
  check_subset(a);
  for (const auto& b : basis_)
    if (!b.empty() && !b.intersects(a)) return false;
  return true;
}

bool FiniteSpace::is_discrete() const {
  for (int x = 0; x < n_points_; ++x)
    if (cores_[static_cast<std::size_t>(x)] != SmallSet::singleton(x)) return false;
  return true;
}

PointSetReport FiniteSpace::category_report(SmallSet a) const {
  PointSetReport r;
  r.set = a;
  r.is_open = is_open(a);
  r.is_closed = is_closed(a);
  r.is_dense = is_dense(a);
  // The interior is the largest open subset, so a contains a dense open set
  // iff its interior is dense.
  r.is_comeager = is_dense(interior(a));
  r.is_meager = is_dense(interior(points() - a));
  return r;
}

std::vector<SmallSet> FiniteSpace::basic_neighborhoods(int x) const {
  check_point(x);
  std::vector<SmallSet> out;
  for (const auto& b : basis_)
    if (b.contains(x)) out.push_back(b);
  return out;
}

ValidationReport FiniteSpace::validate() const {
  ValidationReport report;
  if (n_points_ == 0) report.add("empty-space", "the space has no points", {});
  SmallSet covered;
  for (const auto& b : basis_) covered |= b;
  (points() - covered).for_each([&](int x) {
    report.add("cover", "point " + std::to_string(x) + " lies in no basis set", {x});
  });
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      const SmallSet meet = basis_[i] & basis_[j];
      meet.for_each([&](int z) {
        for (const auto& b : basis_)
          if (b.contains(z) && b.subset_of(meet)) return;
        report.add("intersection",
                   "basis sets " + std::to_string(i) + " and " + std::to_string(j) +
                       " meet in a non-open set at point " + std::to_string(z),
                   {static_cast<int>(i), static_cast<int>(j), z});
      });
    }
  return report;
}

}  // namespace orbitgames
