#include "orbitgames/models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace orbitgames {

namespace {

std::size_t encode(const Tuple& t, int n) {
  std::size_t code = 0;
  for (int v : t) code = code * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
  return code;
}

std::size_t power(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

void require_same_language(const RelStructure& a, const RelStructure& b) {
  if (a.language() != b.language()) throw std::invalid_argument("structures have different languages");
}

/// Calls f on every tuple of the given arity over `domain`.
template <typename F>
void for_each_tuple(const std::vector<int>& domain, int arity, F&& f) {
  if (arity > 0 && domain.empty()) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
  Tuple t(static_cast<std::size_t>(arity));
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) t[i] = domain[idx[i]];
    f(t);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == domain.size()) idx[pos++] = 0;
    if (pos == idx.size()) return;
  }
}

// Prefix-extension game shared by the Becker-style model games. Player I
// demands the next coordinate (or, once everything is demanded, repeats the
// demand forever); Player II assigns it an unused target. A position is safe
// iff the assignment so far is consistent.
Arena prefix_extension_arena(int n_source, int n_target, const std::function<bool(const std::vector<int>&)>& consistent) {
  Arena arena;
  std::map<std::vector<int>, int> demand_ids;
  std::function<int(const std::vector<int>&)> visit = [&](const std::vector<int>& prefix) -> int {
    auto found = demand_ids.find(prefix);
    if (found != demand_ids.end()) return found->second;
    std::string label = "assigned [";
    for (std::size_t i = 0; i < prefix.size(); ++i) label += (i ? "," : "") + std::to_string(prefix[i]);
    label += "]";
    const bool safe = consistent(prefix);
    const int demand = arena.add_position(Player::I, safe, "I demands: " + label);
    demand_ids.emplace(prefix, demand);
    if (!safe) return demand;
    if (static_cast<int>(prefix.size()) == n_source) {
      arena.add_move(demand, demand);
      return demand;
    }
    const int reply = arena.add_position(Player::II, true, "II extends: " + label);
    arena.add_move(demand, reply);
    for (int target = 0; target < n_target; ++target) {
      if (std::find(prefix.begin(), prefix.end(), target) != prefix.end()) continue;
      std::vector<int> next = prefix;
      next.push_back(target);
      const int child = visit(next);
      arena.add_move(reply, child);
    }
    return demand;
  };
  arena.initial = visit({});
  return arena;
}

bool ii_wins(const Arena& arena) { return solve_closed_game(arena).winner_at(arena.initial) == Player::II; }

void require_injective(const SeqInstance& s, const char* what) {
  if (!s.injective()) throw std::invalid_argument(std::string(what) + ": sequence has repeated entries");
}

}  // namespace

RelStructure::RelStructure(int universe_size, Language language, std::vector<std::vector<Tuple>> tuples)
    : universe_size_(universe_size), language_(std::move(language)), tuples_(std::move(tuples)) {
  if (universe_size_ < 0) throw std::invalid_argument("RelStructure: negative universe size");
  if (tuples_.size() != language_.size())
    throw std::invalid_argument("RelStructure: one tuple list per relation symbol required");
  for (std::size_t r = 0; r < language_.size(); ++r) {
    const int arity = language_[r].arity;
    if (arity < 0) throw std::invalid_argument("RelStructure: negative arity for " + language_[r].name);
    auto& ts = tuples_[r];
    for (const auto& t : ts) {
      if (static_cast<int>(t.size()) != arity)
        throw std::invalid_argument("RelStructure: tuple of wrong arity for " + language_[r].name);
      for (int v : t)
        if (v < 0 || v >= universe_size_)
          throw std::invalid_argument("RelStructure: tuple entry " + std::to_string(v) + " outside the universe");
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<char> table(power(universe_size_, arity), 0);
    for (const auto& t : ts) table[encode(t, universe_size_)] = 1;
    table_.push_back(std::move(table));
  }
}

RelStructure RelStructure::digraph(int universe_size, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Tuple> ts;
  for (const auto& [u, v] : edges) ts.push_back({u, v});
  return RelStructure(universe_size, {{"E", 2}}, {std::move(ts)});
}

bool RelStructure::holds(std::size_t relation, const Tuple& t) const {
  for (int v : t)
    if (v < 0 || v >= universe_size_) return false;
  return table_[relation][encode(t, universe_size_)] != 0;
}

RelStructure RelStructure::induced(const std::vector<int>& elements) const {
  std::vector<int> renumber(static_cast<std::size_t>(universe_size_), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) renumber[static_cast<std::size_t>(elements[i])] = static_cast<int>(i);
  std::vector<std::vector<Tuple>> out(language_.size());
  for (std::size_t r = 0; r < language_.size(); ++r)
    for (const auto& t : tuples_[r]) {
      Tuple mapped;
      for (int v : t) mapped.push_back(renumber[static_cast<std::size_t>(v)]);
      if (std::find(mapped.begin(), mapped.end(), -1) == mapped.end()) out[r].push_back(std::move(mapped));
    }
  return RelStructure(static_cast<int>(elements.size()), language_, std::move(out));
}

bool is_partial_embedding(const RelStructure& a, const RelStructure& b, const std::vector<int>& map) {
  std::vector<int> domain;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] >= 0) domain.push_back(static_cast<int>(i));
  std::vector<int> image;
  for (int i : domain) image.push_back(map[static_cast<std::size_t>(i)]);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  for (std::size_t r = 0; r < a.language().size(); ++r) {
    bool ok = true;
    for_each_tuple(domain, a.language()[r].arity, [&](const Tuple& t) {
      if (!ok) return;
      Tuple mapped;
      for (int v : t) mapped.push_back(map[static_cast<std::size_t>(v)]);
      ok = a.holds(r, t) == b.holds(r, mapped);
    });
    if (!ok) return false;
  }
  return true;
}

EmbeddingResult f_embedding_exists(const RelStructure& a, const RelStructure& b) {
  require_same_language(a, b);
  EmbeddingResult out;
  const int na = a.universe_size(), nb = b.universe_size();
  if (na > nb) return out;
  std::vector<int> map(static_cast<std::size_t>(na), -1);
  std::vector<char> used(static_cast<std::size_t>(nb), 0);
  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == na) return is_partial_embedding(a, b, map);
    for (int t = 0; t < nb; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      used[static_cast<std::size_t>(t)] = 1;
      map[static_cast<std::size_t>(i)] = t;
      if (assign(i + 1)) return true;
      used[static_cast<std::size_t>(t)] = 0;
    }
    map[static_cast<std::size_t>(i)] = -1;
    return false;
  };
  if (assign(0)) {
    out.exists = true;
    out.injection = map;
  }
  return out;
}

EmbeddingResult isomorphism_exists(const RelStructure& a, const RelStructure& b) {
  require_same_language(a, b);
  EmbeddingResult out;
  if (a.universe_size() != b.universe_size()) return out;
  std::vector<int> perm(static_cast<std::size_t>(a.universe_size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_partial_embedding(a, b, perm)) {
      out.exists = true;
      out.injection = perm;
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Arena logic_becker_arena(const RelStructure& a, const RelStructure& b) {
  require_same_language(a, b);
  const int na = a.universe_size();
  return prefix_extension_arena(na, b.universe_size(), [&](const std::vector<int>& prefix) {
    std::vector<int> map(static_cast<std::size_t>(na), -1);
    std::copy(prefix.begin(), prefix.end(), map.begin());
    return is_partial_embedding(a, b, map);
  });
}

bool logic_becker_game(const RelStructure& a, const RelStructure& b) { return ii_wins(logic_becker_arena(a, b)); }

Arena logic_hjorth_arena(const RelStructure& a, const RelStructure& b) {
  require_same_language(a, b);
  const int na = a.universe_size(), nb = b.universe_size();
  if (na > 12 || nb > 12) throw std::invalid_argument("logic_hjorth_arena: universes above 12 elements are not supported");
  // Key: 4 bits per a-element holding map+1, then the pending pick.
  auto key_of = [&](const std::vector<int>& map, int pick) {
    std::uint64_t k = 0;
    for (int v : map) k = (k << 4) | static_cast<std::uint64_t>(v + 1);
    return (k << 8) | static_cast<std::uint64_t>(pick + 1);
  };
  Arena arena;
  std::unordered_map<std::uint64_t, int> ids;
  struct Item {
    std::vector<int> map;
    int pick;  // -1: Player I to pick; i < na: a-element i; na + j: b-element j
  };
  std::vector<Item> work;
  auto get = [&](const std::vector<int>& map, int pick) {
    const auto key = key_of(map, pick);
    auto [it, fresh] = ids.try_emplace(key, arena.size());
    if (fresh) {
      const bool safe = pick >= 0 || is_partial_embedding(a, b, map);
      std::string label = "map [";
      for (std::size_t i = 0; i < map.size(); ++i) label += (i ? "," : "") + std::to_string(map[i]);
      label += "]";
      if (pick >= 0) label += pick < na ? " match a" + std::to_string(pick) : " match b" + std::to_string(pick - na);
      arena.add_position(pick < 0 ? Player::I : Player::II, safe, std::move(label));
      work.push_back({map, pick});
    }
    return it->second;
  };
  arena.initial = get(std::vector<int>(static_cast<std::size_t>(na), -1), -1);
  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();
    const int p = ids.at(key_of(item.map, item.pick));
    if (!arena.safe[static_cast<std::size_t>(p)]) continue;
    std::vector<char> hit(static_cast<std::size_t>(nb), 0);
    for (int v : item.map)
      if (v >= 0) hit[static_cast<std::size_t>(v)] = 1;
    if (item.pick < 0) {
      for (int i = 0; i < na; ++i)
        if (item.map[static_cast<std::size_t>(i)] < 0) arena.add_move(p, get(item.map, i));
      for (int j = 0; j < nb; ++j)
        if (!hit[static_cast<std::size_t>(j)]) arena.add_move(p, get(item.map, na + j));
    } else if (item.pick < na) {
      for (int j = 0; j < nb; ++j) {
        if (hit[static_cast<std::size_t>(j)]) continue;
        auto next = item.map;
        next[static_cast<std::size_t>(item.pick)] = j;
        arena.add_move(p, get(next, -1));
      }
    } else {
      for (int i = 0; i < na; ++i) {
        if (item.map[static_cast<std::size_t>(i)] >= 0) continue;
        auto next = item.map;
        next[static_cast<std::size_t>(i)] = item.pick - na;
        arena.add_move(p, get(next, -1));
      }
    }
  }
  return arena;
}

bool logic_hjorth_game(const RelStructure& a, const RelStructure& b) { return ii_wins(logic_hjorth_arena(a, b)); }

// ---------------------------------------------------------------------------

SeqInstance::SeqInstance(std::vector<std::string> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen(entries_.begin(), entries_.end());
  injective_ = seen.size() == entries_.size();
}

SeqInstance shift(const SeqInstance& y) {
  if (y.size() == 0) return y;
  return SeqInstance(std::vector<std::string>(y.entries().begin() + 1, y.entries().end()));
}

bool eq_plus(const SeqInstance& x, const SeqInstance& y) {
  return std::set<std::string>(x.entries().begin(), x.entries().end()) ==
         std::set<std::string>(y.entries().begin(), y.entries().end());
}

bool ran_subset(const SeqInstance& x, const SeqInstance& y) {
  require_injective(x, "ran_subset");
  require_injective(y, "ran_subset");
  const std::set<std::string> range(y.entries().begin(), y.entries().end());
  return std::all_of(x.entries().begin(), x.entries().end(), [&](const std::string& s) { return range.count(s) > 0; });
}

Arena symbolic_becker_seq_arena(const SeqInstance& x, const SeqInstance& y) {
  require_injective(x, "symbolic_becker_seq");
  require_injective(y, "symbolic_becker_seq");
  return prefix_extension_arena(static_cast<int>(x.size()), static_cast<int>(y.size()),
                                [&](const std::vector<int>& prefix) {
                                  for (std::size_t i = 0; i < prefix.size(); ++i)
                                    if (y.entries()[static_cast<std::size_t>(prefix[i])] != x.entries()[i]) return false;
                                  return true;
                                });
}

bool symbolic_becker_seq(const SeqInstance& x, const SeqInstance& y) { return ii_wins(symbolic_becker_seq_arena(x, y)); }

std::optional<std::vector<int>> permutation_conjugacy(const DiagUnitary& a, const DiagUnitary& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("permutation_conjugacy: dimensions differ");
  std::vector<int> sigma(static_cast<std::size_t>(a.dim()));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool match = true;
    for (std::size_t i = 0; i < sigma.size() && match; ++i)
      match = b.eigenvalues[static_cast<std::size_t>(sigma[i])] == a.eigenvalues[i];
    if (match) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

DiagReductionResult diag_reduction_check(const SeqInstance& lambda, const SeqInstance& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("diag_reduction_check: length mismatch");
  require_injective(lambda, "diag_reduction_check");
  require_injective(mu, "diag_reduction_check");
  DiagReductionResult out;
  out.eq_plus = eq_plus(lambda, mu);
  out.permutation = permutation_conjugacy(DiagUnitary{lambda.entries()}, DiagUnitary{mu.entries()});
  out.conjugate = out.permutation.has_value();
  out.agree = out.eq_plus == out.conjugate;
  return out;
}

}  // namespace orbitgames
