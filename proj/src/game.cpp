#include "orbitgames/game.hpp"

#include <stdexcept>
#include <string>

namespace orbitgames {

int Arena::add_position(Player who, bool is_safe, std::string label) {
  owner.push_back(who);
  moves.emplace_back();
  safe.push_back(is_safe ? 1 : 0);
  labels.push_back(std::move(label));
  return size() - 1;
}

void Arena::check() const {
  const auto n = owner.size();
  if (moves.size() != n || safe.size() != n || (!labels.empty() && labels.size() != n))
    throw std::invalid_argument("malformed arena: per-position tables differ in length");
  if (initial < 0 || static_cast<std::size_t>(initial) >= n)
    throw std::invalid_argument("malformed arena: initial position out of range");
  for (std::size_t p = 0; p < n; ++p)
    for (int q : moves[p])
      if (q < 0 || static_cast<std::size_t>(q) >= n)
        throw std::invalid_argument("malformed arena: dangling move " + std::to_string(p) + " -> " +
                                    std::to_string(q));
}

SolveResult solve_closed_game(const Arena& arena) {
  arena.check();
  const auto n = static_cast<std::size_t>(arena.size());
  std::vector<std::vector<int>> preds(n);
  for (std::size_t p = 0; p < n; ++p)
    for (int q : arena.moves[p]) preds[static_cast<std::size_t>(q)].push_back(static_cast<int>(p));

  SolveResult result;
  result.rank.assign(n, unranked);
  // II-owned positions count down their successors outside the attractor.
  std::vector<int> pending(n, 0);
  std::vector<int> frontier;
  for (std::size_t p = 0; p < n; ++p) {
    pending[p] = static_cast<int>(arena.moves[p].size());
    const bool dead_end_for_ii = arena.owner[p] == Player::II && arena.moves[p].empty();
    if (!arena.safe[p] || dead_end_for_ii) {
      result.rank[p] = 0;
      frontier.push_back(static_cast<int>(p));
    }
  }

  // Layer k is fully known before layer k+1 is built, so a position's rank is
  // the first stage that captures it.
  for (int stage = 1; !frontier.empty(); ++stage) {
    std::vector<int> next;
    for (int q : frontier)
      for (int p : preds[static_cast<std::size_t>(q)]) {
        const auto up = static_cast<std::size_t>(p);
        if (result.rank[up] != unranked) continue;
        if (arena.owner[up] == Player::I) {
          result.rank[up] = stage;
          next.push_back(p);
        } else if (--pending[up] == 0) {
          result.rank[up] = stage;
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }

  result.winner.resize(n);
  for (std::size_t p = 0; p < n; ++p) result.winner[p] = result.rank[p] == unranked ? Player::II : Player::I;
  return result;
}

Strategy extract_strategy(const Arena& arena, const SolveResult& result, Player player) {
  arena.check();
  if (result.winner_at(arena.initial) != player)
    throw std::invalid_argument(std::string("Player ") + to_string(player) +
                                " does not win at the initial position");
  Strategy s;
  s.player = player;
  s.choice.assign(static_cast<std::size_t>(arena.size()), -1);
  for (int p = 0; p < arena.size(); ++p) {
    const auto up = static_cast<std::size_t>(p);
    if (arena.owner[up] != player || result.winner[up] != player) continue;
    int best = -1;
    for (int q : arena.moves[up]) {
      const bool good = player == Player::II ? result.winner_at(q) == Player::II
                                             : result.rank_at(q) < result.rank[up];
      if (!good) continue;
      if (best < 0) {
        best = q;
      } else if (player == Player::I) {
        const int rq = result.rank_at(q), rb = result.rank_at(best);
        if (rq < rb || (rq == rb && q < best)) best = q;
      } else if (q < best) {
        best = q;
      }
    }
    s.choice[up] = best;
  }
  return s;
}

bool related_at_rank(const Arena& arena, const SolveResult& result, int alpha) {
  return result.rank_at(arena.initial) >= alpha;
}

std::vector<bool> relation_at_rank(std::span<const Arena> arenas, std::span<const SolveResult> results,
                                   int alpha) {
  if (arenas.size() != results.size())
    throw std::invalid_argument("relation_at_rank: one solve result per arena required");
  std::vector<bool> out(arenas.size());
  for (std::size_t i = 0; i < arenas.size(); ++i) out[i] = related_at_rank(arenas[i], results[i], alpha);
  return out;
}

Player bounded_play_check(const Arena& arena, int depth) {
  arena.check();
  if (depth < 1) throw std::invalid_argument("bounded_play_check: depth must be at least 1");
  const auto n = static_cast<std::size_t>(arena.size());
  // survives[p]: II wins from p when `remaining` moves are still to be played.
  std::vector<char> survives(n), next(n);
  for (std::size_t p = 0; p < n; ++p) survives[p] = arena.safe[p];
  for (int remaining = 1; remaining <= depth; ++remaining) {
    for (std::size_t p = 0; p < n; ++p) {
      if (!arena.safe[p]) {
        next[p] = 0;
        continue;
      }
      const auto& mv = arena.moves[p];
      if (arena.owner[p] == Player::II) {
        char any = 0;
        for (int q : mv) any = any || survives[static_cast<std::size_t>(q)];
        next[p] = any;
      } else {
        char all = 1;
        for (int q : mv) all = all && survives[static_cast<std::size_t>(q)];
        next[p] = all;
      }
    }
    survives.swap(next);
  }
  return survives[static_cast<std::size_t>(arena.initial)] ? Player::II : Player::I;
}

}  // namespace orbitgames
