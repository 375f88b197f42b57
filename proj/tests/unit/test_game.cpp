#include "doctest.h"

#include <random>

#include "../support.hpp"
#include "orbitgames/game.hpp"

using namespace orbitgames;

namespace {

Arena self_loop_ii() {
  Arena a;
  a.add_position(Player::II, true);
  a.add_move(0, 0);
  return a;
}

// p0(II) -> p1(I) -> p2, p2 unsafe.
Arena chain() {
  Arena a;
  a.add_position(Player::II, true);
  a.add_position(Player::I, true);
  a.add_position(Player::II, false);
  a.add_move(0, 1);
  a.add_move(1, 2);
  return a;
}

}  // namespace

TEST_CASE("solver examples") {
  const auto r1 = solve_closed_game(self_loop_ii());
  CHECK(r1.winner_at(0) == Player::II);
  CHECK(r1.rank_at(0) == unranked);

  Arena unsafe;
  unsafe.add_position(Player::I, false);
  const auto r2 = solve_closed_game(unsafe);
  CHECK(r2.winner_at(0) == Player::I);
  CHECK(r2.rank_at(0) == 0);

  const auto r3 = solve_closed_game(chain());
  CHECK(r3.winner_at(0) == Player::I);
  CHECK(r3.rank_at(0) == 2);
  CHECK(r3.rank_at(1) == 1);
  CHECK(r3.rank_at(2) == 0);
}

TEST_CASE("dead-end conventions") {
  Arena stuck_ii;
  stuck_ii.add_position(Player::II, true);
  CHECK(solve_closed_game(stuck_ii).winner_at(0) == Player::I);
  Arena stuck_i;
  stuck_i.add_position(Player::I, true);
  CHECK(solve_closed_game(stuck_i).winner_at(0) == Player::II);
}

TEST_CASE("strategies") {
  const Arena loop = self_loop_ii();
  const auto s = extract_strategy(loop, solve_closed_game(loop), Player::II);
  CHECK(s.at(0) == 0);
  CHECK_THROWS_AS(extract_strategy(loop, solve_closed_game(loop), Player::I), std::invalid_argument);

  const Arena c = chain();
  const auto si = extract_strategy(c, solve_closed_game(c), Player::I);
  CHECK(si.at(1) == 2);
  CHECK_FALSE(si.defined_at(0));

  // p0(II) may go to the unsafe p1 or to the safe I-owned loop p2.
  Arena fork;
  fork.add_position(Player::II, true);
  fork.add_position(Player::I, false);
  fork.add_position(Player::I, true);
  fork.add_move(0, 1);
  fork.add_move(0, 2);
  fork.add_move(2, 2);
  const auto res = solve_closed_game(fork);
  const auto sii = extract_strategy(fork, res, Player::II);
  CHECK(sii.at(0) == 2);
  // Replay: following the strategy never leaves the safe region.
  int p = 0;
  for (int step = 0; step < 10; ++step) {
    CHECK(fork.safe[static_cast<std::size_t>(p)]);
    p = fork.owner[static_cast<std::size_t>(p)] == Player::II ? sii.at(p) : fork.moves[static_cast<std::size_t>(p)].front();
  }
}

TEST_CASE("relation at rank") {
  const Arena loop = self_loop_ii();
  const auto rl = solve_closed_game(loop);
  for (int alpha = 0; alpha < 10; ++alpha) CHECK(related_at_rank(loop, rl, alpha));

  const Arena c = chain();
  const auto rc = solve_closed_game(c);
  CHECK(related_at_rank(c, rc, 0));
  CHECK(related_at_rank(c, rc, 1));
  CHECK(related_at_rank(c, rc, 2));
  CHECK_FALSE(related_at_rank(c, rc, 3));
  CHECK_FALSE(related_at_rank(c, rc, 7));

  const std::vector<Arena> arenas{loop, c};
  const std::vector<SolveResult> results{rl, rc};
  CHECK(relation_at_rank(arenas, results, 0) == std::vector<bool>{true, true});
  CHECK(relation_at_rank(arenas, results, 3) == std::vector<bool>{true, false});
}

TEST_CASE("bounded play") {
  CHECK(bounded_play_check(self_loop_ii(), 5) == Player::II);
  Arena unsafe;
  unsafe.add_position(Player::II, false);
  for (int d : {1, 2, 9}) CHECK(bounded_play_check(unsafe, d) == Player::I);
  CHECK(bounded_play_check(chain(), 1) == Player::II);
  CHECK(bounded_play_check(chain(), 3) == Player::I);
  CHECK_THROWS_AS(bounded_play_check(chain(), 0), std::invalid_argument);
}

TEST_CASE("malformed arenas are rejected") {
  Arena a = chain();
  a.add_move(1, 7);
  CHECK_THROWS_AS(a.check(), std::invalid_argument);
  CHECK_THROWS_AS(solve_closed_game(a), std::invalid_argument);
}

TEST_CASE("property: solver against bounded play on random arenas") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const Arena a = testing::random_arena(rng, 25);
    const auto res = solve_closed_game(a);
    CHECK(bounded_play_check(a, a.size() + 1) == res.winner_at(a.initial));
    // A rank r win for Player I needs r moves, plus one when it ends in a dead end of II.
    if (res.winner_at(a.initial) == Player::I) {
      const int r = res.rank_at(a.initial);
      CHECK(bounded_play_check(a, r + 1) == Player::I);
      if (r >= 2) CHECK(bounded_play_check(a, r - 1) == Player::II);
    }
  }
}

TEST_CASE("property: pointwise rank formula") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Arena a = testing::random_arena(rng, 30);
    const auto res = solve_closed_game(a);
    for (int p = 0; p < a.size(); ++p) {
      const auto& mv = a.moves[static_cast<std::size_t>(p)];
      int expected;
      if (!a.safe[static_cast<std::size_t>(p)] || (a.owner[static_cast<std::size_t>(p)] == Player::II && mv.empty())) {
        expected = 0;
      } else if (a.owner[static_cast<std::size_t>(p)] == Player::I) {
        int best = unranked;
        for (int q : mv) best = std::min(best, res.rank_at(q));
        expected = best == unranked ? unranked : best + 1;
      } else {
        int worst = 0;
        for (int q : mv) worst = std::max(worst, res.rank_at(q));
        expected = worst == unranked ? unranked : worst + 1;
      }
      CHECK(res.rank_at(p) == expected);
      CHECK((res.winner_at(p) == Player::I) == (res.rank_at(p) != unranked));
    }
  }
}

TEST_CASE("property: adding moves for Player II never hurts II") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Arena a = testing::random_arena(rng, 20);
    const auto before = solve_closed_game(a);
    std::uniform_int_distribution<int> pos(0, a.size() - 1);
    for (int k = 0; k < 3; ++k) {
      const int from = pos(rng);
      if (a.owner[static_cast<std::size_t>(from)] == Player::II) a.add_move(from, pos(rng));
    }
    const auto after = solve_closed_game(a);
    for (int p = 0; p < a.size(); ++p)
      if (before.winner_at(p) == Player::II) CHECK(after.winner_at(p) == Player::II);
  }
}

TEST_CASE("property: extracted strategies are winning") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Arena a = testing::random_arena(rng, 20);
    const auto res = solve_closed_game(a);
    const Player w = res.winner_at(a.initial);
    const auto s = extract_strategy(a, res, w);
    for (int p = 0; p < a.size(); ++p) {
      if (a.owner[static_cast<std::size_t>(p)] != w || res.winner_at(p) != w) continue;
      if (a.moves[static_cast<std::size_t>(p)].empty()) continue;
      if (w == Player::I && res.rank_at(p) == 0) continue;
      REQUIRE(s.defined_at(p));
      const int q = s.at(p);
      CHECK(res.winner_at(q) == w);
      if (w == Player::I) CHECK(res.rank_at(q) == res.rank_at(p) - 1);
    }
  }
}
