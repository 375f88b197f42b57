#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitgames/game.hpp"

namespace orbitgames {

// ---------------------------------------------------------------------------
// Finite relational structures, atomic fragment

struct RelationSymbol {
  std::string name;
  int arity = 0;

  bool operator==(const RelationSymbol&) const = default;
};

using Language = std::vector<RelationSymbol>;
using Tuple = std::vector<int>;

class RelStructure {
public:
  RelStructure() = default;
  /// tuples[i] interprets language[i]. Throws std::invalid_argument on arity
  /// or range violations.
  RelStructure(int universe_size, Language language, std::vector<std::vector<Tuple>> tuples);

  /// One binary relation "E" with the given edges.
  static RelStructure digraph(int universe_size, const std::vector<std::pair<int, int>>& edges);

  int universe_size() const { return universe_size_; }
  const Language& language() const { return language_; }
  /// Sorted, duplicate-free.
  const std::vector<Tuple>& tuples(std::size_t relation) const { return tuples_[relation]; }
  bool holds(std::size_t relation, const Tuple& t) const;

  /// Substructure induced on `elements`, renumbered in the given order.
  RelStructure induced(const std::vector<int>& elements) const;

  bool operator==(const RelStructure& o) const {
    return universe_size_ == o.universe_size_ && language_ == o.language_ && tuples_ == o.tuples_;
  }

private:
  int universe_size_ = 0;
  Language language_;
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<std::vector<char>> table_;  // holds[rel][encoded tuple]
};

/// True iff `map` (partial, -1 = undefined) preserves and reflects every
/// relation on the tuples it fully defines.
bool is_partial_embedding(const RelStructure& a, const RelStructure& b, const std::vector<int>& map);

struct EmbeddingResult {
  bool exists = false;
  std::optional<std::vector<int>> injection;
};

/// Brute force over all injections of a's universe into b's.
/// Throws std::invalid_argument on a language mismatch.
EmbeddingResult f_embedding_exists(const RelStructure& a, const RelStructure& b);

/// Brute force over all bijections.
EmbeddingResult isomorphism_exists(const RelStructure& a, const RelStructure& b);

/// Player I demands the elements of a one at a time; Player II extends a
/// partial embedding into b. Built and solved as a closed game.
Arena logic_becker_arena(const RelStructure& a, const RelStructure& b);
bool logic_becker_game(const RelStructure& a, const RelStructure& b);

/// Back-and-forth: Player I picks an unmatched element on either side and
/// Player II matches it on the other, keeping a partial isomorphism.
Arena logic_hjorth_arena(const RelStructure& a, const RelStructure& b);
bool logic_hjorth_game(const RelStructure& a, const RelStructure& b);

// ---------------------------------------------------------------------------
// Sequences and the jump =⁺

class SeqInstance {
public:
  SeqInstance() = default;
  explicit SeqInstance(std::vector<std::string> entries);

  const std::vector<std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool injective() const { return injective_; }

  bool operator==(const SeqInstance& o) const { return entries_ == o.entries_; }

private:
  std::vector<std::string> entries_;
  bool injective_ = true;
};

/// Drops the head entry.
SeqInstance shift(const SeqInstance& y);

/// Same set of entries.
bool eq_plus(const SeqInstance& x, const SeqInstance& y);

/// Range containment. Throws std::invalid_argument on non-injective input.
bool ran_subset(const SeqInstance& x, const SeqInstance& y);

/// Player I demands agreement on the first k coordinates of x; Player II
/// extends an injection of those coordinates into positions of y carrying the
/// same letters. Throws std::invalid_argument on non-injective input.
Arena symbolic_becker_seq_arena(const SeqInstance& x, const SeqInstance& y);
bool symbolic_becker_seq(const SeqInstance& x, const SeqInstance& y);

/// Diagonal operator with symbolic eigenvalue labels standing for distinct
/// unit scalars (or reals in [0, 1] for the self-adjoint reading; the
/// computation is the same).
struct DiagUnitary {
  std::vector<std::string> eigenvalues;
  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Permutation sigma with P diag(a) P^-1 = diag(b), i.e. b[sigma[i]] = a[i],
/// found by brute force over all permutations.
std::optional<std::vector<int>> permutation_conjugacy(const DiagUnitary& a, const DiagUnitary& b);

struct DiagReductionResult {
  bool eq_plus = false;
  bool conjugate = false;
  bool agree = false;
  std::optional<std::vector<int>> permutation;
};

/// Compares x =⁺ y with unitary equivalence of diag(x) and diag(y). Throws
/// std::invalid_argument on a length mismatch or non-injective input.
DiagReductionResult diag_reduction_check(const SeqInstance& lambda, const SeqInstance& mu);

}  // namespace orbitgames
