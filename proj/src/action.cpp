#include "orbitgames/action.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbitgames {

int block_of(const Partition& p, int x) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i].contains(x)) return static_cast<int>(i);
  return -1;
}

GroupAction::GroupAction(TopGroup group, FiniteSpace space, std::vector<std::vector<int>> table)
    : group_(std::move(group)), space_(std::move(space)), table_(std::move(table)) {
  const auto n = static_cast<std::size_t>(space_.n_points());
  if (table_.size() != static_cast<std::size_t>(group_.order()))
    throw std::invalid_argument("GroupAction: table needs one row per group element");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("GroupAction: table row has the wrong length");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw std::invalid_argument("GroupAction: table entry " + std::to_string(v) + " is not a point");
  }
}

GroupAction GroupAction::trivial_on(TopGroup group, FiniteSpace space) {
  std::vector<int> row(static_cast<std::size_t>(space.n_points()));
  for (std::size_t i = 0; i < row.size(); ++i) row[i] = static_cast<int>(i);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(group.order()), row);
  return GroupAction(std::move(group), std::move(space), std::move(table));
}

SmallSet GroupAction::image(int g, SmallSet a) const {
  SmallSet out;
  a.for_each([&](int x) { out.insert(apply(g, x)); });
  return out;
}

SmallSet GroupAction::translates(SmallSet elements, int x) const {
  SmallSet out;
  elements.for_each([&](int g) { out.insert(apply(g, x)); });
  return out;
}

Partition GroupAction::orbit_partition() const {
  Partition blocks;
  SmallSet seen;
  for (int x = 0; x < space_.n_points(); ++x) {
    if (seen.contains(x)) continue;
    const SmallSet o = orbit(x);
    blocks.push_back(o);
    seen |= o;
  }
  return blocks;
}

ValidationReport GroupAction::validate() const {
  ValidationReport report = space_.validate();
  report.append(group_.validate());
  const int n = space_.n_points();
  const int e = group_.identity();
  for (int x = 0; x < n; ++x)
    if (apply(e, x) != x) report.add("action-identity", "identity moves point " + std::to_string(x), {x});
  for (int g = 0; g < group_.order(); ++g)
    for (int h = 0; h < group_.order(); ++h)
      for (int x = 0; x < n; ++x)
        if (apply(g, apply(h, x)) != apply(group_.mult(g, h), x))
          report.add("action-compatibility",
                     "g(hx) != (gh)x at (" + std::to_string(g) + "," + std::to_string(h) + "," +
                         std::to_string(x) + ")",
                     {g, h, x});
  const auto& basis = space_.basis();
  for (int g = 0; g < group_.order(); ++g)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const SmallSet img = image(g, basis[b]);
      if (!space_.is_open(img))
        report.add("homeomorphism",
                   "element " + std::to_string(g) + " maps basis set " + basis[b].str() +
                       " to non-open " + img.str(),
                   {g, static_cast<int>(b)});
    }
  return report;
}

void GroupAction::require_valid() const {
  auto report = validate();
  if (!report.ok()) throw InvalidInstance(std::move(report));
}

}  // namespace orbitgames
