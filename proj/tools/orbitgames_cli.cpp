#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "orbitgames/catalog.hpp"
#include "orbitgames/io.hpp"
#include "orbitgames/models.hpp"
#include "orbitgames/orbit_games.hpp"

using namespace orbitgames;
using nlohmann::json;

namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown by oracle-diff after printing its report.
struct MismatchFound {};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path.string() + "'");
}

InstanceDoc load(const std::string& path) { return parse_instance(read_text(path)); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

unsigned worker_count(int requested) {
  long n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("ORBITGAMES_THREADS")) n = std::strtol(env, nullptr, 10);
  }
  if (n <= 0) n = static_cast<long>(std::max(1U, std::thread::hardware_concurrency()));
  return static_cast<unsigned>(n);
}

/// Runs f(0..n-1) on up to `workers` threads and returns the results in index order.
template <typename F>
auto parallel_map(std::size_t n, unsigned workers, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  std::vector<decltype(f(std::size_t{0}))> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned k = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

SmallSet parse_set(const std::string& text) {
  SmallSet s;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v >= 64) throw ParseError("bad set element '" + item + "' in '" + text + "'");
    s.insert(v);
  }
  return s;
}

GroupAction valid_action(const InstanceDoc& doc) {
  GroupAction a = doc.action();
  a.require_valid();
  return a;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.emplace_back(x, y);
  return out;
}

// ---------------------------------------------------------------------------

struct Common {
  std::string file;
  bool groupoid = false;
  int threads = 0;
};

int cmd_validate(const Common& c) {
  const InstanceDoc doc = load(c.file);
  json out = json::object();
  bool ok = true;
  if (doc.space || doc.group || doc.action_table) {
    const auto report = doc.action().validate();
    ok = ok && report.ok();
    out["action"] = to_json(report);
  }
  if (doc.groupoid) {
    const auto report = validate_groupoid(*doc.groupoid);
    ok = ok && report.ok();
    out["groupoid"] = to_json(report);
  }
  if (out.empty()) throw SemanticError("nothing to validate: the document has no action or groupoid");
  print(out);
  return ok ? 0 : 3;
}

int cmd_orbits(const Common& c) {
  const InstanceDoc doc = load(c.file);
  if (c.groupoid) {
    print({{"orbits", to_json(groupoid_orbit_partition(doc.require_groupoid()))}});
  } else {
    print({{"orbits", to_json(valid_action(doc).orbit_partition())}});
  }
  return 0;
}

template <typename Verdict>
json verdict_json(const Verdict& v, bool with_strategy) {
  json j = to_json(v);
  if (with_strategy && v.strategy) j["strategy"] = to_json(*v.strategy);
  return j;
}

int cmd_pair_game(const Common& c, GraphKind kind, std::vector<int> pair, bool all, bool with_strategy) {
  const InstanceDoc doc = load(c.file);
  std::vector<std::pair<int, int>> pairs;
  std::function<json(int, int)> solve;
  if (c.groupoid) {
    const FiniteGroupoid& g = doc.require_groupoid();
    if (all) {
      const auto ids = g.object_ids();
      for (int x : ids)
        for (int y : ids) pairs.emplace_back(x, y);
    }
    solve = [&g, kind, with_strategy](int x, int y) {
      return kind == GraphKind::becker ? verdict_json(becker_embeddable(g, x, y), with_strategy)
                                       : verdict_json(hjorth_isomorphic(g, x, y), with_strategy);
    };
  } else {
    const GroupAction a = valid_action(doc);
    if (all) pairs = all_pairs(a.space().n_points());
    solve = [a, kind, with_strategy](int x, int y) {
      return kind == GraphKind::becker ? verdict_json(becker_embeddable(a, x, y), with_strategy)
                                       : verdict_json(hjorth_isomorphic(a, x, y), with_strategy);
    };
  }
  if (!all) {
    if (pair.size() != 2) throw ParseError("expected a pair X Y or --all");
    pairs.emplace_back(pair[0], pair[1]);
  }
  auto results = parallel_map(pairs.size(), worker_count(c.threads), [&](std::size_t i) {
    try {
      return solve(pairs[i].first, pairs[i].second);
    } catch (const std::out_of_range& e) {
      throw SemanticError(e.what());
    }
  });
  if (all)
    print({{"game", to_string(kind)}, {"pairs", results}});
  else
    print(results.front());
  return 0;
}

int cmd_local_orbit(const Common& c, int x, const std::string& u, const std::string& v) {
  const InstanceDoc doc = load(c.file);
  const SmallSet us = parse_set(u);
  json out = {{"x", x}, {"U", to_json(us)}};
  try {
    if (c.groupoid) {
      out["local_orbit"] = to_json(groupoid_local_orbit(doc.require_groupoid(), x, us));
    } else {
      const SmallSet vs = parse_set(v);
      out["V"] = to_json(vs);
      out["local_orbit"] = to_json(local_orbit(valid_action(doc), x, us, vs));
    }
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }
  print(out);
  return 0;
}

int cmd_turbulence(const Common& c) {
  print(to_json(turbulence_report(valid_action(load(c.file)))));
  return 0;
}

int cmd_graphs(const Common& c, const std::string& kind, const std::string& format) {
  const InstanceDoc doc = load(c.file);
  const GraphKind k = kind == "becker" ? GraphKind::becker : GraphKind::hjorth;
  OrbitQuotientGraph g;
  if (c.groupoid) {
    const FiniteGroupoid& gr = doc.require_groupoid();
    g = k == GraphKind::becker ? becker_digraph(gr) : hjorth_graph(gr);
  } else {
    const GroupAction a = valid_action(doc);
    g = k == GraphKind::becker ? becker_digraph(a) : hjorth_graph(a);
  }
  if (format == "dot")
    std::cout << emit_dot(g);
  else
    print(to_json(g));
  return 0;
}

int cmd_obstruction(const Common& c) {
  const InstanceDoc doc = load(c.file);
  print(to_json(c.groupoid ? cli_obstruction_check(doc.require_groupoid()) : cli_obstruction_check(valid_action(doc))));
  return 0;
}

int cmd_ranks(const Common& c, std::vector<int> pair) {
  const InstanceDoc doc = load(c.file);
  Arena arena;
  try {
    arena = c.groupoid ? hjorth_arena(doc.require_groupoid(), pair[0], pair[1], false)
                       : hjorth_arena(valid_action(doc), pair[0], pair[1], false);
  } catch (const std::out_of_range& e) {
    throw SemanticError(e.what());
  }
  const SolveResult r = solve_closed_game(arena);
  json related = json::array();
  for (int alpha = 0; alpha <= arena.size(); ++alpha) related.push_back(related_at_rank(arena, r, alpha));
  const int rank = r.rank_at(arena.initial);
  print({{"x", pair[0]},
         {"y", pair[1]},
         {"arena_size", arena.size()},
         {"ii_wins", r.winner_at(arena.initial) == Player::II},
         {"rank", rank == unranked ? json(nullptr) : json(rank)},
         {"related_at", related}});
  return 0;
}

// ---------------------------------------------------------------------------

std::vector<SeqInstance> injective_sequences(int max_len, int letters) {
  std::vector<SeqInstance> out;
  std::vector<std::string> cur;
  std::function<void()> rec = [&] {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int l = 0; l < letters; ++l) {
      std::string s(1, static_cast<char>('a' + l));
      if (std::find(cur.begin(), cur.end(), s) != cur.end()) continue;
      cur.push_back(std::move(s));
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<RelStructure> small_digraphs(int max_n) {
  std::vector<RelStructure> out;
  for (int n = 0; n <= max_n; ++n)
    for (std::uint32_t bits = 0; bits < (1U << (n * n)); ++bits) {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n * n; ++i)
        if ((bits >> i) & 1U) edges.emplace_back(i / n, i % n);
      out.push_back(RelStructure::digraph(n, edges));
    }
  return out;
}

json structure_json(const RelStructure& s) {
  return {{"universe_size", s.universe_size()}, {"edges", s.tuples(0)}};
}

// Each check returns null when the oracle agrees and a counterexample otherwise.
int cmd_oracle_diff(const Common& c, const std::string& family, const std::string& catalog_name) {
  std::optional<InstanceDoc> doc;
  if (!c.file.empty()) doc = load(c.file);
  const unsigned workers = worker_count(c.threads);
  std::vector<json> findings;
  std::size_t checked = 0;

  if (family == "spaces") {
    std::vector<CatalogEntry> entries;
    if (doc)
      entries.push_back({doc->name, valid_action(*doc)});
    else
      entries = build_catalog(catalog_name);
    checked = entries.size();
    findings = parallel_map(entries.size(), workers, [&](std::size_t i) -> json {
      const GroupAction& a = entries[i].action;
      const Relation b = becker_relation(a);
      const Relation h = hjorth_relation(a);
      const FiniteSpace& sp = a.space();
      for (const auto& [x, y] : all_pairs(sp.n_points())) {
        bool becker = false, hjorth = false;
        for (int g = 0; g < a.group().order(); ++g) {
          const int gy = a.apply(g, y);
          becker = becker || sp.core_open(x).contains(gy);
          hjorth = hjorth || (sp.core_open(x).contains(gy) && sp.core_open(gy).contains(x));
        }
        const bool hjorth_bad = a.group().is_hausdorff() && h[x][y] != hjorth;
        if (b[x][y] != becker || hjorth_bad)
          return {{"instance", to_json(instance_from_action(entries[i].name, a))},
                  {"pair", {x, y}},
                  {"becker", {{"solver", b[x][y]}, {"oracle", becker}}},
                  {"hjorth", {{"solver", h[x][y]}, {"oracle", hjorth}}}};
      }
      return nullptr;
    });
  } else if (family == "logic") {
    std::vector<RelStructure> items;
    if (doc)
      for (const auto& [name, s] : doc->structures) items.push_back(s);
    else
      items = small_digraphs(3);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j) pairs.emplace_back(i, j);
    checked = pairs.size();
    findings = parallel_map(pairs.size(), workers, [&](std::size_t k) -> json {
      const auto& a = items[pairs[k].first];
      const auto& b = items[pairs[k].second];
      const bool eg = logic_becker_game(a, b), eo = f_embedding_exists(a, b).exists;
      const bool hg = logic_hjorth_game(a, b), ho = isomorphism_exists(a, b).exists;
      if (eg == eo && hg == ho) return nullptr;
      return {{"a", structure_json(a)},
              {"b", structure_json(b)},
              {"becker", {{"game", eg}, {"oracle", eo}}},
              {"hjorth", {{"game", hg}, {"oracle", ho}}}};
    });
  } else if (family == "sequences" || family == "diag") {
    std::vector<SeqInstance> items;
    if (doc)
      for (const auto& [name, s] : doc->sequences) items.push_back(s);
    else
      items = injective_sequences(4, 6);
    for (const auto& s : items)
      if (!s.injective()) throw SemanticError("oracle-diff needs injective sequences");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j)
        if (family == "sequences" || items[i].size() == items[j].size()) pairs.emplace_back(i, j);
    checked = pairs.size();
    const bool seq = family == "sequences";
    findings = parallel_map(pairs.size(), workers, [&](std::size_t k) -> json {
      const auto& x = items[pairs[k].first];
      const auto& y = items[pairs[k].second];
      if (seq) {
        const bool game = symbolic_becker_seq(x, y), oracle = ran_subset(x, y);
        if (game == oracle) return nullptr;
        return {{"x", x.entries()}, {"y", y.entries()}, {"game", game}, {"oracle", oracle}};
      }
      const auto r = diag_reduction_check(x, y);
      if (r.agree) return nullptr;
      return {{"lambda", x.entries()}, {"mu", y.entries()}, {"eq_plus", r.eq_plus}, {"conjugate", r.conjugate}};
    });
  } else {
    throw ParseError("unknown family '" + family + "'");
  }

  std::size_t mismatches = 0;
  json first = nullptr;
  for (auto& f : findings)
    if (!f.is_null()) {
      if (mismatches++ == 0) first = std::move(f);
    }
  print({{"family", family}, {"checked", checked}, {"mismatches", mismatches}, {"counterexample", first}});
  if (mismatches > 0) throw MismatchFound{};
  return 0;
}

std::string file_stem(std::string name) {
  for (char& ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_') ch = '_';
  return name;
}

int cmd_gen(const std::string& catalog_name, const std::string& out_dir) {
  std::vector<CatalogEntry> entries;
  try {
    entries = build_catalog(catalog_name);
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }
  if (out_dir.empty()) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(to_json(instance_from_action(e.name, e.action)));
    print(arr);
    return 0;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir + "': " + ec.message());
  for (const auto& e : entries)
    write_text(std::filesystem::path(out_dir) / (file_stem(e.name) + ".json"),
               emit_instance(instance_from_action(e.name, e.action)));
  std::cout << "wrote " << entries.size() << " instances to " << out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

std::string position_text(const Arena& a, int p) {
  const auto& labels = a.labels;
  const std::string label = static_cast<std::size_t>(p) < labels.size() ? labels[static_cast<std::size_t>(p)] : "";
  return label.empty() ? "position " + std::to_string(p) : label;
}

int engine_move(const Arena& arena, const SolveResult& r, int p) {
  const Player me = arena.owner[static_cast<std::size_t>(p)];
  const auto& mv = arena.moves[static_cast<std::size_t>(p)];
  if (r.winner_at(p) == me) {
    Arena at = arena;
    at.initial = p;
    return extract_strategy(at, r, me).at(p);
  }
  // Losing side: Player II delays the loss as long as possible, Player I takes the first move.
  if (me == Player::I) return mv.front();
  return *std::max_element(mv.begin(), mv.end(), [&](int a, int b) { return r.rank_at(a) < r.rank_at(b); });
}

int cmd_play(const Common& c, const std::string& game, std::vector<int> pair, const std::string& side,
             int max_moves) {
  const InstanceDoc doc = load(c.file);
  Arena arena;
  try {
    if (c.groupoid) {
      const FiniteGroupoid& g = doc.require_groupoid();
      arena = game == "becker" ? becker_arena(g, pair[0], pair[1], false) : hjorth_arena(g, pair[0], pair[1], false);
    } else {
      const GroupAction a = valid_action(doc);
      arena = game == "becker" ? becker_arena(a, pair[0], pair[1], false) : hjorth_arena(a, pair[0], pair[1], false);
    }
  } catch (const std::out_of_range& e) {
    throw SemanticError(e.what());
  }
  const SolveResult r = solve_closed_game(arena);
  const Player human = side == "I" ? Player::I : Player::II;
  if (max_moves <= 0) max_moves = 2 * arena.size() + 2;

  std::cout << "game: " << game << " x=" << pair[0] << " y=" << pair[1] << "; you play Player " << to_string(human)
            << ", the engine plays Player " << to_string(opponent(human)) << "\n";
  std::cout << "solver: Player " << to_string(r.winner_at(arena.initial)) << " wins from the start\n";

  int p = arena.initial;
  for (int move = 1;; ++move) {
    const auto& mv = arena.moves[static_cast<std::size_t>(p)];
    const Player owner = arena.owner[static_cast<std::size_t>(p)];
    if (!arena.safe[static_cast<std::size_t>(p)]) {
      std::cout << "result: Player I wins (" << position_text(arena, p) << ")\n";
      return 0;
    }
    if (mv.empty()) {
      std::cout << "result: Player " << to_string(owner) << " has no legal move; Player " << to_string(opponent(owner))
                << " wins\n";
      return 0;
    }
    if (move > max_moves) {
      std::cout << "result: play stayed safe for " << max_moves << " moves; Player II wins\n";
      return 0;
    }
    std::cout << "[" << move << "] " << position_text(arena, p) << "\n";
    int next;
    if (owner == human) {
      for (std::size_t i = 0; i < mv.size(); ++i) std::cout << "  " << i + 1 << ") " << position_text(arena, mv[i]) << "\n";
      for (;;) {
        std::cout << "choose 1-" << mv.size() << "> " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) {
          std::cout << "\nresult: input ended; game abandoned\n";
          return 0;
        }
        if (line == "q" || line == "quit") {
          std::cout << "result: game abandoned\n";
          return 0;
        }
        std::size_t used = 0;
        long k = 0;
        try {
          k = std::stol(line, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == line.size() && used > 0 && k >= 1 && k <= static_cast<long>(mv.size())) {
          next = mv[static_cast<std::size_t>(k - 1)];
          break;
        }
        std::cout << "illegal move '" << line << "'; enter a number from 1 to " << mv.size() << "\n";
      }
    } else {
      next = engine_move(arena, r, p);
      std::cout << "engine (Player " << to_string(owner) << ") -> " << position_text(arena, next) << "\n";
    }
    p = next;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve Becker and Hjorth games on finite group actions and groupoids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "orbitgames 0.1.0");

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_groupoid = true) {
    sub->add_option("file", common.file, "instance document, or - for stdin")->required();
    if (with_groupoid) sub->add_flag("--groupoid", common.groupoid, "use the groupoid section (points are object arrows)");
    sub->add_option("--threads", common.threads, "worker cap; defaults to ORBITGAMES_THREADS");
  };

  std::vector<int> pair;
  bool all = false, with_strategy = false;
  int x = 0;
  std::string u, v, kind = "becker", format = "structured", family, catalog_name = "all", out_dir, game = "becker",
                     side = "II";
  int max_moves = 0;

  auto* validate = app.add_subcommand("validate", "report violated instance invariants");
  add_common(validate, false);
  auto* orbits = app.add_subcommand("orbits", "orbit partition");
  add_common(orbits);

  auto* becker = app.add_subcommand("becker", "Becker embeddability of a pair or of all pairs");
  auto* hjorth = app.add_subcommand("hjorth", "Hjorth isomorphism of a pair or of all pairs");
  for (auto* sub : {becker, hjorth}) {
    add_common(sub);
    auto* p = sub->add_option("pair", pair, "X Y")->expected(2);
    auto* a = sub->add_flag("--all", all, "every ordered pair");
    p->excludes(a);
    sub->add_flag("--strategy", with_strategy, "include the winner's positional strategy");
  }

  auto* lo = app.add_subcommand("local-orbit", "local orbit of X inside U under steps from V");
  add_common(lo);
  lo->add_option("x", x, "point (object arrow with --groupoid)")->required();
  lo->add_option("U", u, "comma-separated set")->required();
  lo->add_option("V", v, "comma-separated group elements (ignored with --groupoid)");

  auto* turb = app.add_subcommand("turbulence", "pointwise turbulence report");
  add_common(turb, false);

  auto* graphs = app.add_subcommand("graphs", "orbit quotient graph");
  add_common(graphs);
  graphs->add_option("--kind", kind, "becker or hjorth")->check(CLI::IsMember({"becker", "hjorth"}));
  graphs->add_option("--format", format, "dot or structured")->check(CLI::IsMember({"dot", "structured"}));

  auto* obstruction = app.add_subcommand("obstruction", "invariant dense sets versus Becker edges");
  add_common(obstruction);

  auto* ranks = app.add_subcommand("ranks", "rank hierarchy of the Hjorth game on a pair");
  add_common(ranks);
  ranks->add_option("pair", pair, "X Y")->expected(2)->required();

  auto* diff = app.add_subcommand("oracle-diff", "compare solvers with brute-force oracles");
  diff->add_option("--family", family, "spaces, logic, sequences or diag")
      ->required()
      ->check(CLI::IsMember({"spaces", "logic", "sequences", "diag"}));
  diff->add_option("file", common.file, "instance document; defaults to the built-in corpus");
  diff->add_option("--catalog", catalog_name, "catalog for the spaces family");
  diff->add_option("--threads", common.threads, "worker cap; defaults to ORBITGAMES_THREADS");

  auto* gen = app.add_subcommand("gen", "emit catalog instances");
  gen->add_option("--catalog", catalog_name, "all, discrete, sierpinski, indiscrete or fixtures")->required();
  gen->add_option("--out", out_dir, "directory for one file per instance; stdout otherwise");

  auto* play = app.add_subcommand("play", "play a game against the engine");
  add_common(play);
  play->add_option("pair", pair, "X Y")->expected(2)->required();
  play->add_option("--game", game, "becker or hjorth")->check(CLI::IsMember({"becker", "hjorth"}));
  play->add_option("--as", side, "side you play")->check(CLI::IsMember({"I", "II"}));
  play->add_option("--max-moves", max_moves, "declare Player II the winner after this many safe moves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(common);
    if (*orbits) return cmd_orbits(common);
    if (*becker) return cmd_pair_game(common, GraphKind::becker, pair, all, with_strategy);
    if (*hjorth) return cmd_pair_game(common, GraphKind::hjorth, pair, all, with_strategy);
    if (*lo) return cmd_local_orbit(common, x, u, v);
    if (*turb) return cmd_turbulence(common);
    if (*graphs) return cmd_graphs(common, kind, format);
    if (*obstruction) return cmd_obstruction(common);
    if (*ranks) return cmd_ranks(common, pair);
    if (*diff) return cmd_oracle_diff(common, family, catalog_name);
    if (*gen) return cmd_gen(catalog_name, out_dir);
    if (*play) return cmd_play(common, game, pair, side, max_moves);
  } catch (const MismatchFound&) {
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "orbitgames: parse error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "orbitgames: i/o error: " << e.what() << "\n";
    return 4;
  } catch (const InvalidInstance& e) {
    std::cerr << "orbitgames: invalid instance: " << e.report().summary() << "\n";
    return 3;
  } catch (const SemanticError& e) {
    std::cerr << "orbitgames: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "orbitgames: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "orbitgames: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
