#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace orbitgames {

enum class Player : std::uint8_t { I, II };

inline const char* to_string(Player p) { return p == Player::I ? "I" : "II"; }
inline Player opponent(Player p) { return p == Player::I ? Player::II : Player::I; }

/// Rank of positions Player I never captures.
inline constexpr int unranked = std::numeric_limits<int>::max();

/// A finite game graph, open for Player I and closed for Player II.
///
/// Player II loses as soon as play enters an unsafe position and wins every
/// infinite play that stays safe. A II-owned position without moves is a loss
/// for II; an I-owned position without moves is a win for II.
struct Arena {
  std::vector<Player> owner;
  std::vector<std::vector<int>> moves;
  std::vector<char> safe;
  /// Optional, one per position; used by the play loop and dumps.
  std::vector<std::string> labels;
  int initial = 0;

  int size() const { return static_cast<int>(owner.size()); }

  int add_position(Player who, bool is_safe, std::string label = {});
  void add_move(int from, int to) { moves[static_cast<std::size_t>(from)].push_back(to); }

  /// Throws std::invalid_argument on inconsistent sizes, an out-of-range
  /// initial position, or a dangling move.
  void check() const;
};

struct SolveResult {
  std::vector<Player> winner;
  /// Attractor stage at which Player I captures the position; `unranked` on
  /// II-winning positions.
  std::vector<int> rank;

  Player winner_at(int p) const { return winner[static_cast<std::size_t>(p)]; }
  int rank_at(int p) const { return rank[static_cast<std::size_t>(p)]; }
};

/// Partial positional strategy; choice[p] == -1 where undefined.
struct Strategy {
  Player player = Player::II;
  std::vector<int> choice;

  bool defined_at(int p) const { return choice[static_cast<std::size_t>(p)] >= 0; }
  int at(int p) const { return choice[static_cast<std::size_t>(p)]; }
};

/// Greatest-fixed-point safety solving with Player I's attractor ranks.
///
/// Stage 0 holds the unsafe positions and II's dead ends. A position enters
/// stage k+1 when it is I-owned with some move into the first k stages, or
/// II-owned with all of its moves there. Everything never captured is the
/// greatest safe trap for Player II.
SolveResult solve_closed_game(const Arena& arena);

/// Winning positional strategy of `player` on its owned winning positions.
/// Player II keeps play inside its winning region; Player I moves to a
/// successor of rank one less. Ties go to the lowest position index.
/// Throws std::invalid_argument if `player` does not win at the initial position.
Strategy extract_strategy(const Arena& arena, const SolveResult& result, Player player);

/// True iff Player I has no winning strategy of rank < alpha from the initial
/// position, i.e. rank(initial) >= alpha.
bool related_at_rank(const Arena& arena, const SolveResult& result, int alpha);

std::vector<bool> relation_at_rank(std::span<const Arena> arenas, std::span<const SolveResult> results,
                                   int alpha);

/// Winner at the initial position of the game cut off after `depth` moves,
/// where Player II wins every play that survives that long. Computed by
/// backward induction over play length, independently of the attractor.
Player bounded_play_check(const Arena& arena, int depth);

}  // namespace orbitgames
