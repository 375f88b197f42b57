#include "orbitgames/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace orbitgames {

namespace {

using Perm = std::vector<int>;

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Greedy generating set: add the least element outside the subgroup generated so far.
std::vector<int> generators(const TopGroup& g) {
  std::vector<int> gens;
  SmallSet generated = SmallSet::singleton(g.identity());
  for (int a = 0; a < g.order(); ++a) {
    if (generated.contains(a)) continue;
    gens.push_back(a);
    for (bool grew = true; grew;) {
      grew = false;
      for (int x : generated.to_vector())
        for (int s : gens) {
          const int y = g.mult(s, x);
          if (!generated.contains(y)) {
            generated.insert(y);
            grew = true;
          }
        }
    }
  }
  return gens;
}

bool is_normal(const TopGroup& g, SmallSet h) {
  for (int a = 0; a < g.order(); ++a)
    for (int x : h.to_vector())
      if (!h.contains(g.mult(g.mult(a, x), g.inverse(a)))) return false;
  return true;
}

std::string chain_name(const TopGroup& g, const std::vector<SmallSet>& chain) {
  std::string out;
  for (const auto& v : chain) out += (out.empty() ? "" : ">") + std::to_string(v.size());
  return g.is_hausdorff() || g.order() == 1 ? out : out + "(nh)";
}

}  // namespace

std::vector<NamedSpace> curated_spaces() {
  return {
      {"discrete1", FiniteSpace::discrete(1)},
      {"discrete2", FiniteSpace::discrete(2)},
      {"indiscrete2", FiniteSpace::indiscrete(2)},
      {"sierpinski", FiniteSpace::sierpinski()},
      {"discrete3", FiniteSpace::discrete(3)},
      {"indiscrete3", FiniteSpace::indiscrete(3)},
      {"chain3", FiniteSpace(3, {SmallSet{2}, SmallSet{1, 2}, SmallSet{0, 1, 2}})},
      {"fork3", FiniteSpace(3, {SmallSet{0}, SmallSet{1}, SmallSet{0, 1, 2}})},
      {"cofork3", FiniteSpace(3, {SmallSet{0}, SmallSet{0, 1}, SmallSet{0, 2}})},
      {"pair-plus-point3", FiniteSpace(3, {SmallSet{0, 1}, SmallSet{2}})},
      {"discrete4", FiniteSpace::discrete(4)},
      {"indiscrete4", FiniteSpace::indiscrete(4)},
      {"two-pairs4", FiniteSpace(4, {SmallSet{0, 1}, SmallSet{2, 3}})},
      {"two-sierpinski4", FiniteSpace(4, {SmallSet{1}, SmallSet{0, 1}, SmallSet{3}, SmallSet{2, 3}})},
      {"chain4", FiniteSpace(4, {SmallSet{3}, SmallSet{2, 3}, SmallSet{1, 2, 3}, SmallSet{0, 1, 2, 3}})},
      {"diamond4", FiniteSpace(4, {SmallSet{3}, SmallSet{1, 3}, SmallSet{2, 3}, SmallSet{0, 1, 2, 3}})},
  };
}

std::vector<NamedGroup> catalog_groups() {
  std::vector<NamedGroup> out;
  const std::vector<std::pair<std::string, TopGroup>> bases = {
      {"1", TopGroup::trivial()},
      {"Z2", TopGroup::cyclic(2)},
      {"Z3", TopGroup::cyclic(3)},
      {"Z2xZ2", TopGroup::klein()},
      {"S3", TopGroup::symmetric3()},
  };
  for (const auto& [name, g] : bases) {
    // Proper nontrivial normal subgroups, largest first.
    std::vector<SmallSet> middle;
    const int order = g.order();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << order); ++bits) {
      const SmallSet h(bits);
      if (h.size() > 1 && h.size() < order && g.is_subgroup(h) && is_normal(g, h)) middle.push_back(h);
    }
    std::stable_sort(middle.begin(), middle.end(), [](SmallSet a, SmallSet b) { return a.size() > b.size(); });
    // One representative middle subgroup keeps the catalog small; for Z2xZ2
    // the three candidates are conjugate under automorphisms.
    if (middle.size() > 1) middle.resize(1);
    const SmallSet whole = g.elements(), trivial = SmallSet::singleton(g.identity());
    std::vector<std::vector<SmallSet>> chains;
    if (order == 1) {
      chains.push_back({whole});
    } else {
      chains.push_back({whole, trivial});
      chains.push_back({whole});
      for (const auto& h : middle) {
        chains.push_back({whole, h, trivial});
        chains.push_back({whole, h});
      }
    }
    for (const auto& chain : chains) {
      TopGroup with = g.with_chain(chain);
      out.push_back({name + "[" + chain_name(with, chain) + "]", std::move(with)});
    }
  }
  return out;
}

std::vector<GroupAction> all_actions(const TopGroup& group, const FiniteSpace& space) {
  const int n = space.n_points();
  const auto perms = all_permutations(n);
  const auto gens = generators(group);
  std::vector<GroupAction> out;
  std::vector<std::vector<std::vector<int>>> seen;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    // Extend the generator images to the whole group by breadth-first search.
    std::vector<Perm> image(static_cast<std::size_t>(group.order()));
    Perm id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    image[static_cast<std::size_t>(group.identity())] = id;
    std::vector<int> queue{group.identity()};
    bool consistent = true;
    for (std::size_t qi = 0; qi < queue.size() && consistent; ++qi) {
      const int a = queue[qi];
      for (std::size_t s = 0; s < gens.size() && consistent; ++s) {
        const int b = group.mult(gens[s], a);
        const Perm& ps = perms[choice[s]];
        Perm composed(static_cast<std::size_t>(n));
        for (std::size_t x = 0; x < composed.size(); ++x)
          composed[x] = ps[static_cast<std::size_t>(image[static_cast<std::size_t>(a)][x])];
        auto& slot = image[static_cast<std::size_t>(b)];
        if (slot.empty()) {
          slot = std::move(composed);
          queue.push_back(b);
        } else if (slot != composed) {
          consistent = false;
        }
      }
    }
    if (consistent && std::find(seen.begin(), seen.end(), image) == seen.end()) {
      GroupAction action(group, space, image);
      if (action.validate().ok()) {
        seen.push_back(image);
        out.push_back(std::move(action));
      }
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == perms.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

std::vector<std::string> catalog_names() { return {"all", "discrete", "sierpinski", "indiscrete", "fixtures"}; }

std::vector<CatalogEntry> build_catalog(const std::string& name) {
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown catalog '" + name + "'");
  std::vector<CatalogEntry> out;
  if (name == "fixtures") {
    for (const char* f : {"sierpinski-trivial", "indiscrete2-trivial", "discrete2-trivial", "z2-swap",
                          "z2-trivial-action", "z3-rotation"})
      out.push_back({f, fixture(f)});
    return out;
  }
  for (const auto& [sname, space] : curated_spaces()) {
    if (name != "all" && sname.rfind(name, 0) != 0) continue;
    for (const auto& [gname, group] : catalog_groups()) {
      const auto actions = all_actions(group, space);
      for (std::size_t i = 0; i < actions.size(); ++i) {
        if (out.size() == catalog_cap) return out;
        out.push_back({sname + "/" + gname + "/a" + std::to_string(i), actions[i]});
      }
    }
  }
  return out;
}

GroupAction fixture(const std::string& name) {
  if (name == "sierpinski-trivial") return GroupAction::trivial_on(TopGroup::trivial(), FiniteSpace::sierpinski());
  if (name == "indiscrete2-trivial") return GroupAction::trivial_on(TopGroup::trivial(), FiniteSpace::indiscrete(2));
  if (name == "discrete2-trivial") return GroupAction::trivial_on(TopGroup::trivial(), FiniteSpace::discrete(2));
  if (name == "z2-swap") return GroupAction(TopGroup::cyclic(2), FiniteSpace::discrete(2), {{0, 1}, {1, 0}});
  if (name == "z2-trivial-action") return GroupAction::trivial_on(TopGroup::cyclic(2), FiniteSpace::discrete(2));
  if (name == "z3-rotation")
    return GroupAction(TopGroup::cyclic(3), FiniteSpace::discrete(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace orbitgames
