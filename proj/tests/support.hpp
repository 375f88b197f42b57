#pragma once

// Independent oracles and generators shared by the unit and acceptance
// suites. Nothing here calls the arena builders or the solver.

#include <random>
#include <vector>

#include "orbitgames/action.hpp"
#include "orbitgames/game.hpp"

namespace orbitgames::testing {

/// Every topology on n points, built from a specialization preorder:
/// the core of x is {y : x <= y}. Covers all 355 topologies on 4 points.
inline std::vector<FiniteSpace> all_topologies(int n) {
  std::vector<FiniteSpace> out;
  std::vector<std::pair<int, int>> offdiag;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) offdiag.emplace_back(a, b);
  const std::uint64_t total = std::uint64_t{1} << offdiag.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) le[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
    for (std::size_t i = 0; i < offdiag.size(); ++i)
      if ((mask >> i) & 1U) le[static_cast<std::size_t>(offdiag[i].first)][static_cast<std::size_t>(offdiag[i].second)] = true;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n && transitive; ++c)
          if (le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
              le[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
              !le[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
            transitive = false;
    if (!transitive) continue;
    std::vector<SmallSet> basis;
    for (int a = 0; a < n; ++a) {
      SmallSet up;
      for (int b = 0; b < n; ++b)
        if (le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) up.insert(b);
      basis.push_back(up);
    }
    out.emplace_back(n, basis);
  }
  return out;
}

/// Closed form for the Becker game: Player II can stall with the identity,
/// so everything hinges on one translate of y landing in core(x).
inline bool becker_oracle(const GroupAction& action, int x, int y) {
  const SmallSet core = action.space().core_open(x);
  for (int g = 0; g < action.group().order(); ++g)
    if (core.contains(action.apply(g, y))) return true;
  return false;
}

/// Closed form for the Hjorth game on Hausdorff groups: some translate of y is
/// topologically indistinguishable from x.
inline bool hjorth_oracle_hausdorff(const GroupAction& action, int x, int y) {
  const FiniteSpace& space = action.space();
  for (int g = 0; g < action.group().order(); ++g) {
    const int gy = action.apply(g, y);
    if (space.core_open(x).contains(gy) && space.core_open(gy).contains(x)) return true;
  }
  return false;
}

/// The action map G x X -> X is continuous as a whole, not just one element at
/// a time: the smallest identity neighborhood keeps every core in place.
inline bool jointly_continuous(const GroupAction& action) {
  const SmallSet v = action.group().smallest_neighborhood();
  for (int x = 0; x < action.space().n_points(); ++x) {
    const SmallSet core = action.space().core_open(x);
    for (int h : v.to_vector())
      if (!action.image(h, core).subset_of(core)) return false;
  }
  return true;
}

/// Random arena with up to max_positions positions, every position of
/// out-degree 0..3, roughly a fifth unsafe.
inline Arena random_arena(std::mt19937& rng, int max_positions) {
  std::uniform_int_distribution<int> size_dist(1, max_positions);
  const int n = size_dist(rng);
  std::uniform_int_distribution<int> pos(0, n - 1), deg(0, 3), coin(0, 1), five(0, 4);
  Arena a;
  for (int p = 0; p < n; ++p) a.add_position(coin(rng) ? Player::I : Player::II, five(rng) != 0);
  for (int p = 0; p < n; ++p) {
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) a.add_move(p, pos(rng));
  }
  a.initial = pos(rng);
  a.labels.clear();
  return a;
}

}  // namespace orbitgames::testing
