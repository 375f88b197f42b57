#include "doctest.h"

#include "../support.hpp"
#include "orbitgames/small_set.hpp"
#include "orbitgames/topology.hpp"

using namespace orbitgames;

TEST_CASE("small set basics") {
  SmallSet s = SmallSet::from_indices({0, 2});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.size() == 2);
  CHECK(s.str() == "{0,2}");
  CHECK(s.first() == 0);
  CHECK(SmallSet{}.first() == -1);
  CHECK((SmallSet::full(3) - s) == SmallSet::singleton(1));
  CHECK_THROWS_AS(s.insert(64), std::out_of_range);
}

TEST_CASE("core_open") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(s.core_open(1) == SmallSet::singleton(1));
  CHECK(s.core_open(0) == SmallSet::from_indices({0, 1}));
  CHECK(FiniteSpace::discrete(3).core_open(2) == SmallSet::singleton(2));
  CHECK_THROWS_AS(s.core_open(2), std::out_of_range);
}

TEST_CASE("closure and interior") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(s.closure(SmallSet::singleton(1)) == SmallSet::from_indices({0, 1}));
  CHECK(s.closure(SmallSet::singleton(0)) == SmallSet::singleton(0));
  CHECK(s.closure(SmallSet{}) == SmallSet{});
  CHECK(s.interior(SmallSet::singleton(0)) == SmallSet{});
  CHECK(s.interior(SmallSet::singleton(1)) == SmallSet::singleton(1));
}

TEST_CASE("category report") {
  auto d = FiniteSpace::discrete(2).category_report(SmallSet::singleton(0));
  CHECK_FALSE(d.is_dense);
  CHECK_FALSE(d.is_comeager);

  auto i = FiniteSpace::indiscrete(2).category_report(SmallSet::singleton(0));
  CHECK(i.is_dense);
  CHECK_FALSE(i.is_comeager);
  CHECK_FALSE(i.is_meager);

  auto s = FiniteSpace::sierpinski().category_report(SmallSet::singleton(1));
  CHECK(s.is_dense);
  CHECK(s.is_comeager);
  CHECK(s.is_open);
  CHECK_FALSE(s.is_closed);

  auto m = FiniteSpace::sierpinski().category_report(SmallSet::singleton(0));
  CHECK(m.is_meager);
  CHECK(m.is_closed);
}

TEST_CASE("basis validation") {
  CHECK(FiniteSpace::sierpinski().validate().ok());
  FiniteSpace no_cover(2, {SmallSet::singleton(0)});
  CHECK(no_cover.validate().has("cover"));
  FiniteSpace bad_meet(3, {SmallSet::from_indices({0, 1}), SmallSet::from_indices({1, 2})});
  CHECK(bad_meet.validate().has("intersection"));
}

TEST_CASE("topology enumeration sizes") {
  // Known counts of labelled topologies on 1..4 points.
  CHECK(testing::all_topologies(1).size() == 1);
  CHECK(testing::all_topologies(2).size() == 4);
  CHECK(testing::all_topologies(3).size() == 29);
  CHECK(testing::all_topologies(4).size() == 355);
}

TEST_CASE("property: Kuratowski closure axioms on every topology up to four points") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& space : testing::all_topologies(n)) {
      REQUIRE(space.validate().ok());
      const std::uint64_t subsets = std::uint64_t{1} << n;
      CHECK(space.closure(SmallSet{}) == SmallSet{});
      for (std::uint64_t a = 0; a < subsets; ++a) {
        const SmallSet A(a);
        const SmallSet cA = space.closure(A);
        CHECK(A.subset_of(cA));
        CHECK(space.closure(cA) == cA);
        CHECK(space.is_closed(cA));
        CHECK(space.interior(A).subset_of(A));
        CHECK(space.is_open(space.interior(A)));
        for (std::uint64_t b = 0; b < subsets; ++b) {
          const SmallSet B(b);
          CHECK(space.closure(A | B) == (cA | space.closure(B)));
        }
      }
    }
  }
}

TEST_CASE("property: cores are the smallest open neighborhoods") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& space : testing::all_topologies(n)) {
      const std::uint64_t subsets = std::uint64_t{1} << n;
      for (int x = 0; x < n; ++x) {
        const SmallSet core = space.core_open(x);
        CHECK(space.is_open(core));
        for (std::uint64_t a = 0; a < subsets; ++a)
          if (SmallSet(a).contains(x) && space.is_open(SmallSet(a))) CHECK(core.subset_of(SmallSet(a)));
      }
    }
  }
}

TEST_CASE("property: category flags are consistent") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& space : testing::all_topologies(n)) {
      const std::uint64_t subsets = std::uint64_t{1} << n;
      for (std::uint64_t a = 0; a < subsets; ++a) {
        const auto r = space.category_report(SmallSet(a));
        if (r.is_comeager) CHECK(r.is_dense);
        CHECK(r.is_meager == space.category_report(space.points() - SmallSet(a)).is_comeager);
        // Nonempty meager and comeager at once is impossible in a Baire space.
        CHECK_FALSE((r.is_meager && r.is_comeager));
      }
    }
  }
}

TEST_CASE("property: discrete spaces have singleton cores and trivial closure") {
  for (int n = 1; n <= 5; ++n) {
    const FiniteSpace d = FiniteSpace::discrete(n);
    for (int x = 0; x < n; ++x) CHECK(d.core_open(x) == SmallSet::singleton(x));
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) CHECK(d.closure(SmallSet(a)) == SmallSet(a));
  }
}
