#include "orbitgames/orbit_games.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace orbitgames {

namespace {

// The two games only ever ask four questions about the underlying dynamics:
// which neighbourhoods Player I may name at a point, whether a neighbourhood
// contains a point, where one constrained step can go, and the local orbit.
// Actions and groupoids answer them differently; the arenas are shared.
class Geometry {
public:
  virtual ~Geometry() = default;

  int n_points() const { return n_points_; }
  /// The unconstrained neighbourhood (X, G) or the whole arrow space.
  static constexpr int whole = 0;

  const std::vector<int>& neighborhoods(int z, bool full) const {
    return full ? full_[static_cast<std::size_t>(z)] : reduced_[static_cast<std::size_t>(z)];
  }
  virtual bool contains(int nb, int z) const = 0;
  virtual std::string describe(int nb) const = 0;

  SmallSet step(int z, int nb) const { return cached(step_cache_, z, nb, [&] { return compute_step(z, nb); }); }
  SmallSet local(int z, int nb) const { return cached(local_cache_, z, nb, [&] { return compute_local(z, nb); }); }

protected:
  virtual SmallSet compute_step(int z, int nb) const = 0;
  virtual SmallSet compute_local(int z, int nb) const = 0;

  void finish(int n_points, int n_neighborhoods) {
    n_points_ = n_points;
    const auto slots = static_cast<std::size_t>(n_points) * static_cast<std::size_t>(n_neighborhoods);
    step_cache_.assign(slots, {});
    local_cache_.assign(slots, {});
  }

  std::vector<std::vector<int>> full_, reduced_;

private:
  template <typename F>
  SmallSet cached(std::vector<std::optional<SmallSet>>& cache, int z, int nb, F&& f) const {
    auto& slot = cache[static_cast<std::size_t>(nb) * static_cast<std::size_t>(n_points_) + static_cast<std::size_t>(z)];
    if (!slot) slot = f();
    return *slot;
  }

  int n_points_ = 0;
  mutable std::vector<std::optional<SmallSet>> step_cache_, local_cache_;
};

class ActionGeometry final : public Geometry {
public:
  explicit ActionGeometry(const GroupAction& action) : action_(action) {
    const FiniteSpace& space = action.space();
    const TopGroup& grp = action.group();
    intern(space.points(), grp.elements());
    const int n = space.n_points();
    full_.resize(static_cast<std::size_t>(n));
    reduced_.resize(static_cast<std::size_t>(n));
    for (int z = 0; z < n; ++z) {
      for (const auto& u : space.basic_neighborhoods(z))
        for (const auto& v : grp.filter_chain()) full_[static_cast<std::size_t>(z)].push_back(intern(u, v));
      reduced_[static_cast<std::size_t>(z)].push_back(intern(space.core_open(z), grp.smallest_neighborhood()));
    }
    finish(n, static_cast<int>(pairs_.size()));
  }

  bool contains(int nb, int z) const override { return pairs_[static_cast<std::size_t>(nb)].first.contains(z); }
  std::string describe(int nb) const override {
    const auto& [u, v] = pairs_[static_cast<std::size_t>(nb)];
    return "U=" + u.str() + " V=" + v.str();
  }

protected:
  SmallSet compute_step(int z, int nb) const override {
    return action_.translates(pairs_[static_cast<std::size_t>(nb)].second, z);
  }
  SmallSet compute_local(int z, int nb) const override {
    const auto& [u, v] = pairs_[static_cast<std::size_t>(nb)];
    return local_orbit(action_, z, u, v);
  }

private:
  int intern(SmallSet u, SmallSet v) {
    const auto key = std::make_pair(u, v);
    auto it = std::find(pairs_.begin(), pairs_.end(), key);
    if (it != pairs_.end()) return static_cast<int>(it - pairs_.begin());
    pairs_.push_back(key);
    return static_cast<int>(pairs_.size()) - 1;
  }

  const GroupAction& action_;
  std::vector<std::pair<SmallSet, SmallSet>> pairs_;
};

class GroupoidGeometry final : public Geometry {
public:
  explicit GroupoidGeometry(const FiniteGroupoid& g) : g_(g), ids_(g.object_ids()) {
    ordinal_.assign(static_cast<std::size_t>(g.n_arrows()), -1);
    for (std::size_t i = 0; i < ids_.size(); ++i) ordinal_[static_cast<std::size_t>(ids_[i])] = static_cast<int>(i);
    intern(g.arrows());
    const int n = static_cast<int>(ids_.size());
    full_.resize(ids_.size());
    reduced_.resize(ids_.size());
    for (int z = 0; z < n; ++z) {
      const int obj = ids_[static_cast<std::size_t>(z)];
      for (const auto& w : g.arrow_space().basic_neighborhoods(obj)) full_[static_cast<std::size_t>(z)].push_back(intern(w));
      reduced_[static_cast<std::size_t>(z)].push_back(intern(g.arrow_space().core_open(obj)));
    }
    finish(n, static_cast<int>(sets_.size()));
  }

  int object(int z) const { return ids_[static_cast<std::size_t>(z)]; }
  int ordinal(int arrow) const { return ordinal_[static_cast<std::size_t>(arrow)]; }

  bool contains(int nb, int z) const override { return sets_[static_cast<std::size_t>(nb)].contains(object(z)); }
  std::string describe(int nb) const override { return "W=" + sets_[static_cast<std::size_t>(nb)].str(); }

protected:
  SmallSet compute_step(int z, int nb) const override {
    SmallSet out;
    sets_[static_cast<std::size_t>(nb)].for_each([&](int gamma) {
      if (g_.src(gamma) == object(z)) out.insert(ordinal(g_.rng(gamma)));
    });
    return out;
  }
  SmallSet compute_local(int z, int nb) const override {
    SmallSet out;
    groupoid_local_orbit(g_, object(z), sets_[static_cast<std::size_t>(nb)]).for_each([&](int a) {
      out.insert(ordinal(a));
    });
    return out;
  }

private:
  int intern(SmallSet w) {
    auto it = std::find(sets_.begin(), sets_.end(), w);
    if (it != sets_.end()) return static_cast<int>(it - sets_.begin());
    sets_.push_back(w);
    return static_cast<int>(sets_.size()) - 1;
  }

  const FiniteGroupoid& g_;
  std::vector<int> ids_;
  std::vector<int> ordinal_;
  std::vector<SmallSet> sets_;
};

// ---------------------------------------------------------------------------

std::uint64_t pack(int tag, int a, int b, int c, int d) {
  return (static_cast<std::uint64_t>(tag) << 56) | (static_cast<std::uint64_t>(a) << 48) |
         (static_cast<std::uint64_t>(b) << 40) | (static_cast<std::uint64_t>(c) << 20) |
         static_cast<std::uint64_t>(d);
}

struct Unpacked {
  int tag, a, b, c, d;
};

Unpacked unpack(std::uint64_t k) {
  return {static_cast<int>(k >> 56), static_cast<int>((k >> 48) & 0xff), static_cast<int>((k >> 40) & 0xff),
          static_cast<int>((k >> 20) & 0xfffff), static_cast<int>(k & 0xfffff)};
}

constexpr std::uint64_t bad_key = ~std::uint64_t{0};

class ArenaBuilder {
public:
  explicit ArenaBuilder(bool labels) : labels_(labels) {}

  template <typename LabelFn>
  int get(std::uint64_t key, Player owner, bool safe, LabelFn&& label) {
    auto [it, fresh] = ids_.try_emplace(key, arena_.size());
    if (fresh) {
      arena_.add_position(owner, safe, labels_ ? label() : std::string{});
      keys_.push_back(key);
      work_.push_back(it->second);
    }
    return it->second;
  }

  int bad() {
    return get(bad_key, Player::I, false, [] { return std::string("II has lost"); });
  }

  template <typename Expand>
  Arena run(Expand&& expand) {
    while (!work_.empty()) {
      const int p = work_.back();
      work_.pop_back();
      if (keys_[static_cast<std::size_t>(p)] != bad_key) expand(p, unpack(keys_[static_cast<std::size_t>(p)]));
    }
    if (!labels_) arena_.labels.clear();
    return std::move(arena_);
  }

  void add_move(int from, int to) { arena_.add_move(from, to); }

private:
  bool labels_;
  Arena arena_;
  std::unordered_map<std::uint64_t, int> ids_;
  std::vector<std::uint64_t> keys_;
  std::vector<int> work_;
};

struct BuiltArena {
  Arena arena;
  std::vector<int> initials;
};

// Becker positions: I to move (tag 0) holds the translate z and the pending
// neighbourhood whose V-part constrains Player II's next element; II to move
// (tag 1) additionally holds the neighbourhood just named by Player I.
BuiltArena build_becker(const Geometry& geo, int x, const std::vector<int>& ys, bool full, bool labels) {
  ArenaBuilder b(labels);
  const auto& choices = geo.neighborhoods(x, full);
  BuiltArena out;
  for (int y : ys)
    out.initials.push_back(b.get(pack(0, y, 0, Geometry::whole, 0), Player::I, true, [&] {
      return "I to move: z=" + std::to_string(y) + " pending " + geo.describe(Geometry::whole);
    }));
  out.arena = b.run([&](int p, Unpacked k) {
    if (k.tag == 0) {
      for (int nb : choices)
        b.add_move(p, b.get(pack(1, k.a, 0, k.c, nb), Player::II, true, [&] {
          return "II to move: z=" + std::to_string(k.a) + " must land in " + geo.describe(nb) +
                 " using the pending " + geo.describe(k.c);
        }));
      return;
    }
    geo.step(k.a, k.c).for_each([&](int w) {
      const int q = geo.contains(k.d, w) ? b.get(pack(0, w, 0, k.d, 0), Player::I, true,
                                                 [&] {
                                                   return "I to move: z=" + std::to_string(w) + " pending " +
                                                          geo.describe(k.d);
                                                 })
                                         : b.bad();
      b.add_move(p, q);
    });
  });
  return out;
}

// Hjorth positions (x_n, y_n plus pending neighbourhoods):
//   tag 0: I names U^x at x_n             (c = pending y-neighbourhood)
//   tag 1: II moves y in its local orbit  (c = y-nbhd, d = x-nbhd)
//   tag 2: I names U^y at y_{n+1}         (c = pending x-neighbourhood)
//   tag 3: II moves x in its local orbit  (c = x-nbhd, d = y-nbhd)
BuiltArena build_hjorth(const Geometry& geo, const std::vector<std::pair<int, int>>& pairs, bool full, bool labels) {
  ArenaBuilder b(labels);
  BuiltArena out;
  auto pts = [](int xn, int yn) { return "x=" + std::to_string(xn) + " y=" + std::to_string(yn); };
  for (const auto& [x, y] : pairs)
    out.initials.push_back(b.get(pack(0, x, y, Geometry::whole, 0), Player::I, true, [&] {
      return "I names a neighbourhood of x: " + pts(x, y) + " pending " + geo.describe(Geometry::whole);
    }));
  out.arena = b.run([&](int p, Unpacked k) {
    switch (k.tag) {
      case 0:
        for (int nb : geo.neighborhoods(k.a, full))
          b.add_move(p, b.get(pack(1, k.a, k.b, k.c, nb), Player::II, true, [&] {
            return "II moves y within " + geo.describe(k.c) + " into " + geo.describe(nb) + ": " + pts(k.a, k.b);
          }));
        break;
      case 1:
        geo.local(k.b, k.c).for_each([&](int w) {
          const int q = geo.contains(k.d, w)
                            ? b.get(pack(2, k.a, w, k.d, 0), Player::I, true,
                                    [&] { return "I names a neighbourhood of y: " + pts(k.a, w) + " pending " + geo.describe(k.d); })
                            : b.bad();
          b.add_move(p, q);
        });
        break;
      case 2:
        for (int nb : geo.neighborhoods(k.b, full))
          b.add_move(p, b.get(pack(3, k.a, k.b, k.c, nb), Player::II, true, [&] {
            return "II moves x within " + geo.describe(k.c) + " into " + geo.describe(nb) + ": " + pts(k.a, k.b);
          }));
        break;
      default:
        geo.local(k.a, k.c).for_each([&](int w) {
          const int q = geo.contains(k.d, w)
                            ? b.get(pack(0, w, k.b, k.d, 0), Player::I, true,
                                    [&] { return "I names a neighbourhood of x: " + pts(w, k.b) + " pending " + geo.describe(k.d); })
                            : b.bad();
          b.add_move(p, q);
        });
        break;
    }
  });
  return out;
}

void check_point(const Geometry& geo, int z, const char* what) {
  if (z < 0 || z >= geo.n_points())
    throw std::out_of_range(std::string(what) + ": point " + std::to_string(z) + " out of range");
}

Arena single(BuiltArena built) {
  built.arena.initial = built.initials.front();
  return std::move(built.arena);
}

int object_ordinal(const FiniteGroupoid& g, int object) {
  if (!g.objects().contains(object))
    throw std::out_of_range("arrow " + std::to_string(object) + " is not an object");
  const auto ids = g.object_ids();
  return static_cast<int>(std::find(ids.begin(), ids.end(), object) - ids.begin());
}

template <typename Verdict>
void fill_from_solve(Verdict& v, const Arena& arena) {
  const SolveResult result = solve_closed_game(arena);
  v.ii_wins = result.winner_at(arena.initial) == Player::II;
  v.arena_size = arena.size();
  v.strategy = extract_strategy(arena, result, result.winner_at(arena.initial));
  if constexpr (requires { v.rank; }) v.rank = result.rank_at(arena.initial);
}

Relation becker_relation_on(const Geometry& geo, bool full) {
  const int n = geo.n_points();
  Relation rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<int> ys(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y) ys[static_cast<std::size_t>(y)] = y;
  for (int x = 0; x < n; ++x) {
    const BuiltArena built = build_becker(geo, x, ys, full, false);
    const SolveResult result = solve_closed_game(built.arena);
    for (int y = 0; y < n; ++y)
      rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          result.winner_at(built.initials[static_cast<std::size_t>(y)]) == Player::II;
  }
  return rel;
}

Relation hjorth_relation_on(const Geometry& geo, bool full) {
  const int n = geo.n_points();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) pairs.emplace_back(x, y);
  const BuiltArena built = build_hjorth(geo, pairs, full, false);
  const SolveResult result = solve_closed_game(built.arena);
  Relation rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    rel[static_cast<std::size_t>(pairs[i].first)][static_cast<std::size_t>(pairs[i].second)] =
        result.winner_at(built.initials[i]) == Player::II;
  return rel;
}

Partition ordinal_partition(const FiniteGroupoid& g) {
  const auto ids = g.object_ids();
  Partition out;
  for (const auto& block : groupoid_orbit_partition(g)) {
    SmallSet b;
    block.for_each([&](int a) { b.insert(static_cast<int>(std::find(ids.begin(), ids.end(), a) - ids.begin())); });
    out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [](SmallSet l, SmallSet r) { return l.first() < r.first(); });
  return out;
}

ObstructionReport obstruction_on(const FiniteSpace& space, const Partition& blocks, const Relation& becker) {
  if (blocks.size() > 20) throw std::invalid_argument("cli_obstruction_check: too many orbits to enumerate");
  ObstructionReport report;
  report.verdict = true;
  const std::uint64_t subsets = std::uint64_t{1} << blocks.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    SmallSet c;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if ((mask >> i) & 1U) c |= blocks[i];
    if (!space.is_dense(c)) continue;
    CandidateSet cand{c, std::nullopt};
    for (int x : c.to_vector()) {
      for (int y : c.to_vector())
        if (block_of(blocks, x) != block_of(blocks, y) &&
            becker[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
          cand.witness = std::make_pair(x, y);
          break;
        }
      if (cand.witness) break;
    }
    if (!cand.witness && !report.failing_set) {
      report.verdict = false;
      report.failing_set = c;
    }
    report.candidates.push_back(cand);
  }
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------

SmallSet local_orbit(const GroupAction& action, int x, SmallSet u, SmallSet v) {
  if (!u.contains(x))
    throw std::invalid_argument("local_orbit: point " + std::to_string(x) + " is not in U=" + u.str());
  SmallSet orbit = SmallSet::singleton(x);
  std::vector<int> frontier{x};
  while (!frontier.empty()) {
    const int z = frontier.back();
    frontier.pop_back();
    v.for_each([&](int g) {
      const int w = action.apply(g, z);
      if (u.contains(w) && !orbit.contains(w)) {
        orbit.insert(w);
        frontier.push_back(w);
      }
    });
  }
  return orbit;
}

TurbulenceReport turbulence_report(const GroupAction& action) {
  const FiniteSpace& space = action.space();
  TurbulenceReport report;
  report.preturbulent = true;
  bool all_meager = true;
  for (int x = 0; x < space.n_points(); ++x) {
    PointTurbulence pt;
    const SmallSet orbit = action.orbit(x);
    const PointSetReport cat = space.category_report(orbit);
    pt.dense_orbit = cat.is_dense;
    pt.meager_orbit = cat.is_meager;
    const SmallSet core = space.core_open(x);
    for (const auto& u : space.basic_neighborhoods(x))
      for (const auto& v : action.group().filter_chain())
        if (!core.subset_of(space.closure(local_orbit(action, x, u, v)))) pt.witness_failures.emplace_back(u, v);
    pt.turbulent = pt.dense_orbit && pt.witness_failures.empty();
    report.preturbulent = report.preturbulent && pt.turbulent;
    all_meager = all_meager && pt.meager_orbit;
    report.points.push_back(std::move(pt));
  }
  report.turbulent_action = report.preturbulent && all_meager;
  return report;
}

Arena becker_arena(const GroupAction& action, int x, int y, bool full_choice) {
  ActionGeometry geo(action);
  check_point(geo, x, "becker_arena");
  check_point(geo, y, "becker_arena");
  return single(build_becker(geo, x, {y}, full_choice, true));
}

Arena hjorth_arena(const GroupAction& action, int x, int y, bool full_choice) {
  ActionGeometry geo(action);
  check_point(geo, x, "hjorth_arena");
  check_point(geo, y, "hjorth_arena");
  return single(build_hjorth(geo, {{x, y}}, full_choice, true));
}

Arena becker_arena(const FiniteGroupoid& g, int x, int y, bool full_choice) {
  GroupoidGeometry geo(g);
  return single(build_becker(geo, object_ordinal(g, x), {object_ordinal(g, y)}, full_choice, true));
}

Arena hjorth_arena(const FiniteGroupoid& g, int x, int y, bool full_choice) {
  GroupoidGeometry geo(g);
  return single(build_hjorth(geo, {{object_ordinal(g, x), object_ordinal(g, y)}}, full_choice, true));
}

BeckerVerdict becker_embeddable(const GroupAction& action, int x, int y) {
  BeckerVerdict v;
  v.x = x;
  v.y = y;
  fill_from_solve(v, becker_arena(action, x, y, false));
  const SmallSet core = action.space().core_open(x);
  for (int h = 0; h < action.group().order(); ++h)
    if (core.contains(action.apply(h, y))) {
      v.witness = h;
      break;
    }
  return v;
}

HjorthVerdict hjorth_isomorphic(const GroupAction& action, int x, int y) {
  HjorthVerdict v;
  v.x = x;
  v.y = y;
  fill_from_solve(v, hjorth_arena(action, x, y, false));
  return v;
}

BeckerVerdict becker_embeddable(const FiniteGroupoid& g, int x, int y) {
  BeckerVerdict v;
  v.x = x;
  v.y = y;
  fill_from_solve(v, becker_arena(g, x, y, false));
  const FiniteSpace objects = g.object_space();
  const SmallSet core = objects.core_open(object_ordinal(g, x));
  for (int a = 0; a < g.n_arrows(); ++a)
    if (g.src(a) == y && core.contains(object_ordinal(g, g.rng(a)))) {
      v.witness = a;
      break;
    }
  return v;
}

HjorthVerdict hjorth_isomorphic(const FiniteGroupoid& g, int x, int y) {
  HjorthVerdict v;
  v.x = x;
  v.y = y;
  fill_from_solve(v, hjorth_arena(g, x, y, false));
  return v;
}

Relation becker_relation(const GroupAction& action, bool full_choice) {
  return becker_relation_on(ActionGeometry(action), full_choice);
}
Relation hjorth_relation(const GroupAction& action, bool full_choice) {
  return hjorth_relation_on(ActionGeometry(action), full_choice);
}
Relation becker_relation(const FiniteGroupoid& g, bool full_choice) {
  return becker_relation_on(GroupoidGeometry(g), full_choice);
}
Relation hjorth_relation(const FiniteGroupoid& g, bool full_choice) {
  return hjorth_relation_on(GroupoidGeometry(g), full_choice);
}

// ---------------------------------------------------------------------------

bool OrbitQuotientGraph::has_edge(int a, int b) const {
  if (kind == GraphKind::hjorth && a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

bool OrbitQuotientGraph::loops_only() const {
  return std::all_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
}

bool OrbitQuotientGraph::is_complete() const {
  const int n = static_cast<int>(vertices.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!has_edge(a, b)) return false;
  return true;
}

OrbitQuotientGraph quotient_graph(GraphKind kind, const Partition& blocks, const Relation& relation) {
  OrbitQuotientGraph graph;
  graph.kind = kind;
  graph.vertices = blocks;
  const int n = static_cast<int>(blocks.size());
  auto rel = [&](int x, int y) { return static_cast<bool>(relation[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int rx = blocks[static_cast<std::size_t>(i)].first();
      const int ry = blocks[static_cast<std::size_t>(j)].first();
      const bool value = rel(rx, ry);
      blocks[static_cast<std::size_t>(i)].for_each([&](int x) {
        blocks[static_cast<std::size_t>(j)].for_each([&](int y) {
          if (rel(x, y) != value)
            throw OrbitInvarianceError("relation is not orbit invariant at (" + std::to_string(x) + "," +
                                       std::to_string(y) + ")");
        });
      });
      if (kind == GraphKind::becker) {
        if (value) graph.edges.emplace_back(i, j);
      } else if (i <= j && value && rel(ry, rx)) {
        graph.edges.emplace_back(i, j);
      }
    }
  return graph;
}

OrbitQuotientGraph becker_digraph(const GroupAction& action) {
  return quotient_graph(GraphKind::becker, action.orbit_partition(), becker_relation(action));
}
OrbitQuotientGraph hjorth_graph(const GroupAction& action) {
  return quotient_graph(GraphKind::hjorth, action.orbit_partition(), hjorth_relation(action));
}
OrbitQuotientGraph becker_digraph(const FiniteGroupoid& g) {
  return quotient_graph(GraphKind::becker, ordinal_partition(g), becker_relation(g));
}
OrbitQuotientGraph hjorth_graph(const FiniteGroupoid& g) {
  return quotient_graph(GraphKind::hjorth, ordinal_partition(g), hjorth_relation(g));
}

HomomorphismCheck quotient_homomorphism_check(const std::vector<int>& map, const OrbitQuotientGraph& g1,
                                              const OrbitQuotientGraph& g2) {
  if (g1.kind != g2.kind) throw std::invalid_argument("quotient_homomorphism_check: graph kinds differ");
  if (map.size() != g1.vertices.size())
    throw std::invalid_argument("quotient_homomorphism_check: map must be total on the source vertices");
  for (int v : map)
    if (v < 0 || static_cast<std::size_t>(v) >= g2.vertices.size())
      throw std::invalid_argument("quotient_homomorphism_check: image vertex out of range");
  HomomorphismCheck out;
  for (const auto& [a, b] : g1.edges)
    if (!g2.has_edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) {
      out.ok = false;
      out.violating_edge = std::make_pair(a, b);
      break;
    }
  return out;
}

ObstructionReport cli_obstruction_check(const GroupAction& action) {
  return obstruction_on(action.space(), action.orbit_partition(), becker_relation(action));
}

ObstructionReport cli_obstruction_check(const FiniteGroupoid& g) {
  return obstruction_on(g.object_space(), ordinal_partition(g), becker_relation(g));
}

}  // namespace orbitgames
