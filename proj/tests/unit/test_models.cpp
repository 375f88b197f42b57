#include "doctest.h"

#include <stdexcept>

#include "orbitgames/models.hpp"

using namespace orbitgames;

namespace {

RelStructure edge() { return RelStructure::digraph(2, {{0, 1}, {1, 0}}); }
RelStructure triangle() { return RelStructure::digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}); }
RelStructure path2() { return RelStructure::digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}); }
RelStructure two_edges() { return RelStructure::digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}); }

SeqInstance seq(std::initializer_list<const char*> xs) { return SeqInstance(std::vector<std::string>(xs.begin(), xs.end())); }

}  // namespace

TEST_CASE("structures") {
  const auto t = triangle();
  CHECK(t.holds(0, {2, 0}));
  CHECK_FALSE(t.holds(0, {1, 1}));
  CHECK(t.induced({0, 1}) == edge());
  CHECK_THROWS_AS(RelStructure::digraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(RelStructure(2, {{"E", 2}}, {{{0}}}), std::invalid_argument);
  CHECK(is_partial_embedding(edge(), t, {2, -1}));
  CHECK_FALSE(is_partial_embedding(edge(), t, {2, 2}));
}

TEST_CASE("embedding oracle") {
  const auto r = f_embedding_exists(edge(), triangle());
  CHECK(r.exists);
  REQUIRE(r.injection.has_value());
  CHECK(is_partial_embedding(edge(), triangle(), *r.injection));
  CHECK_FALSE(f_embedding_exists(triangle(), edge()).exists);
  CHECK(f_embedding_exists(path2(), path2()).exists);
  const RelStructure other(1, {{"R", 1}}, {{{0}}});
  CHECK_THROWS_AS(f_embedding_exists(other, edge()), std::invalid_argument);
}

TEST_CASE("logic games") {
  CHECK(logic_becker_game(edge(), triangle()));
  CHECK_FALSE(logic_becker_game(two_edges(), edge()));
  CHECK(logic_becker_game(RelStructure::digraph(0, {}), path2()));
  // The path embeds into the triangle only as a subgraph, not as an induced one.
  CHECK_FALSE(logic_becker_game(path2(), triangle()));

  CHECK(logic_hjorth_game(triangle(), triangle()));
  CHECK_FALSE(logic_hjorth_game(path2(), triangle()));
  CHECK_FALSE(isomorphism_exists(path2(), triangle()).exists);
  const auto relabeled = RelStructure::digraph(3, {{2, 1}, {1, 2}, {1, 0}, {0, 1}});
  CHECK(logic_hjorth_game(path2(), relabeled));
  CHECK(logic_becker_game(path2(), relabeled));
  CHECK(logic_becker_game(relabeled, path2()));
}

TEST_CASE("sequences and the jump") {
  CHECK(eq_plus(seq({"a", "b"}), seq({"b", "a"})));
  CHECK_FALSE(eq_plus(seq({"a", "b"}), seq({"a", "b", "c"})));
  const auto y = seq({"c", "a", "b"});
  CHECK_FALSE(eq_plus(shift(y), y));
  CHECK(shift(y) == seq({"a", "b"}));

  CHECK(ran_subset(seq({"a", "b"}), seq({"a", "b", "c"})));
  CHECK_FALSE(ran_subset(seq({"a", "c"}), seq({"a", "b"})));
  CHECK_THROWS_AS(ran_subset(seq({"a", "a"}), seq({"a"})), std::invalid_argument);
  CHECK_FALSE(seq({"a", "a"}).injective());

  CHECK(symbolic_becker_seq(shift(y), y));
  CHECK_FALSE(symbolic_becker_seq(seq({"d"}), y));
  CHECK(symbolic_becker_seq(y, y));
  CHECK_FALSE(symbolic_becker_seq(y, shift(y)));
}

TEST_CASE("diagonal reduction") {
  const auto swap = diag_reduction_check(seq({"a", "b"}), seq({"b", "a"}));
  CHECK(swap.eq_plus);
  CHECK(swap.conjugate);
  CHECK(swap.agree);
  CHECK(*swap.permutation == std::vector<int>{1, 0});

  const auto miss = diag_reduction_check(seq({"a", "b"}), seq({"a", "c"}));
  CHECK_FALSE(miss.eq_plus);
  CHECK_FALSE(miss.conjugate);
  CHECK(miss.agree);

  const auto same = diag_reduction_check(seq({"x", "y", "z"}), seq({"x", "y", "z"}));
  CHECK(same.eq_plus);
  CHECK(same.conjugate);

  CHECK_THROWS_AS(diag_reduction_check(seq({"a"}), seq({"a", "b"})), std::invalid_argument);
  CHECK(permutation_conjugacy(DiagUnitary{{"p", "q", "r"}}, DiagUnitary{{"r", "p", "q"}}) ==
        std::vector<int>{1, 2, 0});
}
