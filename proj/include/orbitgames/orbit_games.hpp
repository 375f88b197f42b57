#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orbitgames/action.hpp"
#include "orbitgames/game.hpp"
#include "orbitgames/groupoid.hpp"

namespace orbitgames {

// ---------------------------------------------------------------------------
// Local orbits and turbulence

/// Smallest subset of U containing x and closed under g·z for g ∈ V whenever
/// g·z stays in U. Throws std::invalid_argument if x ∉ U.
SmallSet local_orbit(const GroupAction& action, int x, SmallSet u, SmallSet v);

struct PointTurbulence {
  bool dense_orbit = false;
  bool turbulent = false;
  bool meager_orbit = false;
  /// (U, V) with U a basic neighbourhood of the point and V a chain element
  /// such that the closure of the local orbit misses part of core(x).
  std::vector<std::pair<SmallSet, SmallSet>> witness_failures;

  bool operator==(const PointTurbulence&) const = default;
};

struct TurbulenceReport {
  std::vector<PointTurbulence> points;
  bool preturbulent = false;
  bool turbulent_action = false;

  bool operator==(const TurbulenceReport&) const = default;
};

TurbulenceReport turbulence_report(const GroupAction& action);

// ---------------------------------------------------------------------------
// Arenas

/// Emb(x, y): Player I names neighbourhoods (U, V) of x and of the identity,
/// Player II answers with g in the previously named V, moving the current
/// translate z of y to g·z, which must land in the newly named U. The first
/// answer is unconstrained. With full_choice Player I may name any basic
/// neighbourhood and any chain element; otherwise only (core(x), V_m).
Arena becker_arena(const GroupAction& action, int x, int y, bool full_choice);

/// Iso(x, y): Player I alternately names neighbourhoods of x_n and y_{n+1};
/// Player II moves y inside its local orbit into the x-neighbourhood, then x
/// inside its local orbit into the y-neighbourhood.
Arena hjorth_arena(const GroupAction& action, int x, int y, bool full_choice);

/// Groupoid versions; x and y are objects (arrow ids). Player I names basic
/// arrow sets W around the current object and Player II answers with arrows
/// leaving the current object that lie in the pending W.
Arena becker_arena(const FiniteGroupoid& g, int x, int y, bool full_choice);
Arena hjorth_arena(const FiniteGroupoid& g, int x, int y, bool full_choice);

// ---------------------------------------------------------------------------
// Verdicts

struct BeckerVerdict {
  int x = 0, y = 0;
  bool ii_wins = false;
  /// Least h with h·y ∈ core(x) (for groupoids: least arrow from y into the
  /// core of x in G⁰).
  std::optional<int> witness;
  std::optional<Strategy> strategy;
  int arena_size = 0;
};

struct HjorthVerdict {
  int x = 0, y = 0;
  bool ii_wins = false;
  std::optional<Strategy> strategy;
  /// Player I's attractor rank at the initial position (`unranked` if II wins).
  int rank = unranked;
  int arena_size = 0;
};

BeckerVerdict becker_embeddable(const GroupAction& action, int x, int y);
HjorthVerdict hjorth_isomorphic(const GroupAction& action, int x, int y);
BeckerVerdict becker_embeddable(const FiniteGroupoid& g, int x, int y);
HjorthVerdict hjorth_isomorphic(const FiniteGroupoid& g, int x, int y);

/// related[x][y] for every pair of points (objects by ordinal for groupoids),
/// computed with one solve per arena family.
using Relation = std::vector<std::vector<bool>>;
Relation becker_relation(const GroupAction& action, bool full_choice = false);
Relation hjorth_relation(const GroupAction& action, bool full_choice = false);
Relation becker_relation(const FiniteGroupoid& g, bool full_choice = false);
Relation hjorth_relation(const FiniteGroupoid& g, bool full_choice = false);

// ---------------------------------------------------------------------------
// Orbit-quotient graphs

enum class GraphKind { becker, hjorth };

inline const char* to_string(GraphKind k) { return k == GraphKind::becker ? "becker" : "hjorth"; }

struct OrbitQuotientGraph {
  GraphKind kind = GraphKind::becker;
  /// Orbit blocks sorted by least member.
  Partition vertices;
  /// Sorted; Becker edges are ordered pairs, Hjorth edges have first <= second.
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int a, int b) const;
  bool loops_only() const;
  /// Every pair of vertices joined (both directions for Becker).
  bool is_complete() const;

  bool operator==(const OrbitQuotientGraph&) const = default;
};

/// Thrown when a relation fails to be constant on orbit pairs.
class OrbitInvarianceError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

OrbitQuotientGraph becker_digraph(const GroupAction& action);
OrbitQuotientGraph hjorth_graph(const GroupAction& action);
OrbitQuotientGraph becker_digraph(const FiniteGroupoid& g);
OrbitQuotientGraph hjorth_graph(const FiniteGroupoid& g);

/// Quotient graph of `relation` over `blocks`; points are indexed as in the relation.
OrbitQuotientGraph quotient_graph(GraphKind kind, const Partition& blocks, const Relation& relation);

struct HomomorphismCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> violating_edge;
};

/// map[v] is the image vertex of v. Throws std::invalid_argument if the map is
/// not total into g2's vertices or the kinds differ.
HomomorphismCheck quotient_homomorphism_check(const std::vector<int>& map, const OrbitQuotientGraph& g1,
                                              const OrbitQuotientGraph& g2);

// ---------------------------------------------------------------------------
// Obstruction criterion

struct CandidateSet {
  SmallSet set;
  /// (x, y) in the set, in different orbits, with x ≼_B y.
  std::optional<std::pair<int, int>> witness;
};

struct ObstructionReport {
  /// Every invariant dense set holds a Becker edge across distinct orbits.
  bool verdict = false;
  /// All invariant dense sets, in increasing order of their orbit-subset mask.
  std::vector<CandidateSet> candidates;
  std::optional<SmallSet> failing_set;
};

ObstructionReport cli_obstruction_check(const GroupAction& action);
/// Sets and witnesses are object ordinals.
ObstructionReport cli_obstruction_check(const FiniteGroupoid& g);

}  // namespace orbitgames
