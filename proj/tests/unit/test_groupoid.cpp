#include "doctest.h"

#include "../support.hpp"
#include "orbitgames/catalog.hpp"
#include "orbitgames/groupoid.hpp"
#include "orbitgames/orbit_games.hpp"

using namespace orbitgames;

namespace {

// Arrow i*n+j goes from j to i.
FiniteGroupoid pair_groupoid(int n) {
  const int arrows = n * n;
  SmallSet objects;
  std::vector<int> src, rng, inv;
  std::vector<FiniteGroupoid::Triple> comp;
  std::vector<SmallSet> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) objects.insert(i * n + j);
      src.push_back(j * n + j);
      rng.push_back(i * n + i);
      inv.push_back(j * n + i);
      basis.push_back(SmallSet::singleton(i * n + j));
      for (int k = 0; k < n; ++k) comp.push_back({i * n + j, j * n + k, i * n + k});
    }
  return FiniteGroupoid(arrows, objects, src, rng, comp, inv, basis);
}

FiniteGroupoid group_as_groupoid(const TopGroup& g) {
  return action_groupoid(GroupAction::trivial_on(g, FiniteSpace::discrete(1)));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int shift = a.n_arrows();
  SmallSet objects = a.objects();
  b.objects().for_each([&](int x) { objects.insert(x + shift); });
  std::vector<int> src = a.src_table(), rng = a.rng_table(), inv = a.inv_table();
  for (int x = 0; x < b.n_arrows(); ++x) {
    src.push_back(b.src(x) + shift);
    rng.push_back(b.rng(x) + shift);
    inv.push_back(b.inv(x) + shift);
  }
  auto comp = a.comp_triples();
  for (auto [x, y, z] : b.comp_triples()) comp.push_back({x + shift, y + shift, z + shift});
  auto basis = a.basis();
  for (const auto& s : b.basis()) {
    SmallSet t;
    s.for_each([&](int x) { t.insert(x + shift); });
    basis.push_back(t);
  }
  return FiniteGroupoid(shift + b.n_arrows(), objects, src, rng, comp, inv, basis);
}

}  // namespace

TEST_CASE("swapping points of an indiscrete group fails inversion openness") {
  const GroupAction a(TopGroup::cyclic(2).with_chain({SmallSet::full(2)}), FiniteSpace::discrete(2), {{0, 1}, {1, 0}});
  CHECK(a.validate().ok());
  CHECK(validate_groupoid(action_groupoid(a)).has("inversion-open"));
}

TEST_CASE("groupoid validation") {
  CHECK(validate_groupoid(group_as_groupoid(TopGroup::cyclic(2))).ok());
  CHECK(validate_groupoid(pair_groupoid(2)).ok());
  CHECK(pair_groupoid(2).n_arrows() == 4);

  const auto g = pair_groupoid(2);
  auto triples = g.comp_triples();
  triples.erase(triples.begin());
  FiniteGroupoid broken(g.n_arrows(), g.objects(), g.src_table(), g.rng_table(), triples, g.inv_table(), g.basis());
  const auto report = validate_groupoid(broken);
  CHECK(report.has("composition-missing"));

  CHECK_THROWS_AS(FiniteGroupoid(2, SmallSet::singleton(0), {0, 0}, {0, 0}, {{0, 0, 0}, {0, 0, 1}}, {0, 1},
                                 {SmallSet::full(2)}),
                  std::invalid_argument);
}

TEST_CASE("action groupoids") {
  const auto swap = action_groupoid(fixture("z2-swap"));
  CHECK(swap.n_arrows() == 4);
  CHECK(swap.objects().size() == 2);
  CHECK(validate_groupoid(swap).ok());

  const auto triv = action_groupoid(GroupAction::trivial_on(TopGroup::trivial(), FiniteSpace::discrete(3)));
  CHECK(triv.n_arrows() == 3);
  CHECK(triv.objects() == SmallSet::full(3));

  const auto rot = fixture("z3-rotation");
  const auto z3 = action_groupoid(rot);
  // (g,1) after (g,0) is (g^2,0).
  CHECK(z3.comp(action_arrow(rot, 1, 1), action_arrow(rot, 1, 0)) == action_arrow(rot, 2, 0));
  CHECK(z3.comp(action_arrow(rot, 1, 0), action_arrow(rot, 1, 0)) == -1);
  CHECK(z3.object_space() == rot.space());
}

TEST_CASE("restriction") {
  const auto p3 = pair_groupoid(3);
  const auto p2 = restrict_groupoid(p3, SmallSet::from_indices({0, 4}));
  CHECK(p2.n_arrows() == 4);
  CHECK(p2.objects().size() == 2);
  CHECK(validate_groupoid(p2).ok());
  CHECK(groupoid_orbit_partition(p2).size() == 1);

  const auto z2 = group_as_groupoid(TopGroup::cyclic(2));
  const auto iso = restrict_groupoid(z2, z2.objects());
  CHECK(iso == z2);

  const auto swap = action_groupoid(fixture("z2-swap"));
  const auto one = restrict_groupoid(swap, SmallSet::singleton(0));
  CHECK(one.n_arrows() == 1);
  CHECK(validate_groupoid(one).ok());

  CHECK_THROWS_AS(restrict_groupoid(swap, SmallSet::singleton(2)), std::invalid_argument);
}

TEST_CASE("groupoid local orbits") {
  const auto p3 = pair_groupoid(3);
  CHECK(groupoid_local_orbit(p3, 0, p3.arrows()) == p3.objects());
  CHECK(groupoid_local_orbit(p3, 0, p3.objects()) == SmallSet::singleton(0));

  const auto rot = fixture("z3-rotation");
  const auto z3 = action_groupoid(rot);
  SmallSet rect;  // {e,g} x {0,1}
  for (int h : {0, 1})
    for (int x : {0, 1}) rect.insert(action_arrow(rot, h, x));
  CHECK(groupoid_local_orbit(z3, 0, rect) == SmallSet::from_indices({0, 1}));
  CHECK(groupoid_local_orbit(z3, 0, rect) == local_orbit(rot, 0, SmallSet::from_indices({0, 1}),
                                                         SmallSet::from_indices({0, 1})));

  // With every object added to U, the arrow (g,1) lands on the object 2, which is now in U.
  CHECK(groupoid_local_orbit(z3, 0, rect | z3.objects()) == SmallSet::from_indices({0, 1, 2}));

  CHECK_THROWS_AS(groupoid_local_orbit(z3, 0, SmallSet::singleton(1)), std::invalid_argument);
  CHECK_THROWS_AS(groupoid_local_orbit(z3, 3, z3.arrows()), std::invalid_argument);
}

TEST_CASE("groupoid orbit partitions") {
  CHECK(groupoid_orbit_partition(pair_groupoid(3)).size() == 1);
  const auto u = disjoint_union(group_as_groupoid(TopGroup::cyclic(2)), group_as_groupoid(TopGroup::cyclic(3)));
  CHECK(validate_groupoid(u).ok());
  CHECK(groupoid_orbit_partition(u).size() == 2);
}

TEST_CASE("property: catalog action groupoids") {
  for (const auto& entry : build_catalog("all")) {
    const auto& a = entry.action;
    const auto g = action_groupoid(a);
    // Elementwise homeomorphisms are not enough for a topological groupoid.
    CHECK_MESSAGE(validate_groupoid(g).ok() == testing::jointly_continuous(a), entry.name);
    for (int x = 0; x < g.n_arrows(); ++x) CHECK(g.inv(g.inv(x)) == x);
    // Object ordinals line up with points, so the partitions match.
    const auto blocks = groupoid_orbit_partition(g);
    REQUIRE(blocks.size() == a.orbit_partition().size());
    const auto ids = g.object_ids();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      SmallSet ordinals;
      for (std::size_t i = 0; i < ids.size(); ++i)
        if (blocks[b].contains(ids[i])) ordinals.insert(static_cast<int>(i));
      CHECK(ordinals == a.orbit_partition()[b]);
    }
    CHECK(restrict_groupoid(g, g.objects()) == g);
    const SmallSet first = SmallSet::singleton(ids.front());
    const auto once = restrict_groupoid(g, first);
    CHECK(restrict_groupoid(once, once.objects()) == once);
  }
}
