#include "orbitgames/io.hpp"

#include <algorithm>

namespace orbitgames {

using nlohmann::json;

namespace {

std::vector<SmallSet> sets_from(const json& j) {
  std::vector<SmallSet> out;
  for (const auto& item : j) out.push_back(SmallSet::from_indices(item.get<std::vector<int>>()));
  return out;
}

json sets_to(const std::vector<SmallSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.to_vector());
  return out;
}

template <typename F>
auto semantic(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  } catch (const std::out_of_range& e) {
    throw SemanticError(e.what());
  }
}

}  // namespace

InstanceDoc instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance document must be a JSON object");
  InstanceDoc doc;
  try {
    doc.name = j.value("name", std::string{});
    if (j.contains("space")) {
      const auto& s = j.at("space");
      const int n = s.at("n_points").get<int>();
      auto basis = sets_from(s.at("basis"));
      doc.space = semantic([&] { return FiniteSpace(n, std::move(basis)); });
    }
    if (j.contains("group")) {
      const auto& g = j.at("group");
      const int order = g.at("order").get<int>();
      auto mult = g.at("mult").get<std::vector<std::vector<int>>>();
      const int identity = g.value("identity", 0);
      auto inverse = g.at("inverse").get<std::vector<int>>();
      auto chain = sets_from(g.at("filter_chain"));
      doc.group = semantic([&] { return TopGroup(order, std::move(mult), identity, std::move(inverse), std::move(chain)); });
    }
    if (j.contains("action")) doc.action_table = j.at("action").at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("groupoid")) {
      const auto& g = j.at("groupoid");
      const int n = g.at("n_arrows").get<int>();
      const auto flags = g.at("objects").get<std::vector<bool>>();
      SmallSet objects;
      for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) objects.insert(static_cast<int>(i));
      if (flags.size() != static_cast<std::size_t>(n))
        throw SemanticError("groupoid: one object flag per arrow required");
      std::vector<FiniteGroupoid::Triple> comp;
      for (const auto& t : g.at("comp")) {
        const auto v = t.get<std::vector<int>>();
        if (v.size() != 3) throw ParseError("groupoid: comp entries are [a, b, a∘b] triples");
        comp.push_back({v[0], v[1], v[2]});
      }
      auto src = g.at("src").get<std::vector<int>>();
      auto rng = g.at("rng").get<std::vector<int>>();
      auto inv = g.at("inv").get<std::vector<int>>();
      auto basis = sets_from(g.at("basis"));
      doc.groupoid = semantic([&] {
        return FiniteGroupoid(n, objects, std::move(src), std::move(rng), comp, std::move(inv), std::move(basis));
      });
    }
    if (j.contains("structures")) {
      const auto& s = j.at("structures");
      Language lang;
      for (const auto& sym : s.at("language")) lang.push_back({sym.at("name").get<std::string>(), sym.at("arity").get<int>()});
      doc.language = lang;
      for (const auto& item : s.at("items")) {
        std::vector<std::vector<Tuple>> tuples(lang.size());
        const auto& rels = item.value("relations", json::object());
        for (const auto& [rname, ts] : rels.items()) {
          auto it = std::find_if(lang.begin(), lang.end(), [&](const RelationSymbol& r) { return r.name == rname; });
          if (it == lang.end()) throw SemanticError("structure uses undeclared relation '" + rname + "'");
          tuples[static_cast<std::size_t>(it - lang.begin())] = ts.get<std::vector<Tuple>>();
        }
        const int size = item.at("universe_size").get<int>();
        doc.structures.emplace_back(item.at("name").get<std::string>(),
                                    semantic([&] { return RelStructure(size, lang, std::move(tuples)); }));
      }
    }
    if (j.contains("sequences"))
      for (const auto& item : j.at("sequences").at("items"))
        doc.sequences.emplace_back(item.at("name").get<std::string>(),
                                   SeqInstance(item.at("entries").get<std::vector<std::string>>()));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return doc;
}

InstanceDoc parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return instance_from_json(j);
}

json to_json(const InstanceDoc& doc) {
  json j;
  j["name"] = doc.name;
  if (doc.space) j["space"] = {{"n_points", doc.space->n_points()}, {"basis", sets_to(doc.space->basis())}};
  if (doc.group)
    j["group"] = {{"order", doc.group->order()},
                  {"identity", doc.group->identity()},
                  {"mult", doc.group->table()},
                  {"inverse", doc.group->inverse_table()},
                  {"filter_chain", sets_to(doc.group->filter_chain())}};
  if (doc.action_table) j["action"] = {{"table", *doc.action_table}};
  if (doc.groupoid) {
    const auto& g = *doc.groupoid;
    std::vector<bool> flags(static_cast<std::size_t>(g.n_arrows()));
    for (int a = 0; a < g.n_arrows(); ++a) flags[static_cast<std::size_t>(a)] = g.objects().contains(a);
    json comp = json::array();
    for (const auto& t : g.comp_triples()) comp.push_back({t[0], t[1], t[2]});
    j["groupoid"] = {{"n_arrows", g.n_arrows()}, {"objects", flags},     {"src", g.src_table()},
                     {"rng", g.rng_table()},     {"comp", comp},         {"inv", g.inv_table()},
                     {"basis", sets_to(g.basis())}};
  }
  if (doc.language) {
    json lang = json::array();
    for (const auto& r : *doc.language) lang.push_back({{"name", r.name}, {"arity", r.arity}});
    json items = json::array();
    for (const auto& [name, s] : doc.structures) {
      json rels = json::object();
      for (std::size_t r = 0; r < s.language().size(); ++r) rels[s.language()[r].name] = s.tuples(r);
      items.push_back({{"name", name}, {"universe_size", s.universe_size()}, {"relations", rels}});
    }
    j["structures"] = {{"language", lang}, {"items", items}};
  }
  if (!doc.sequences.empty()) {
    json items = json::array();
    for (const auto& [name, s] : doc.sequences) items.push_back({{"name", name}, {"entries", s.entries()}});
    j["sequences"] = {{"items", items}};
  }
  return j;
}

std::string emit_instance(const InstanceDoc& doc) { return to_json(doc).dump(2) + "\n"; }

InstanceDoc instance_from_action(const std::string& name, const GroupAction& action) {
  InstanceDoc doc;
  doc.name = name;
  doc.space = action.space();
  doc.group = action.group();
  doc.action_table = action.table();
  return doc;
}

GroupAction InstanceDoc::action() const {
  if (!space || !group || !action_table)
    throw SemanticError("command needs the space, group and action sections");
  return semantic([&] { return GroupAction(*group, *space, *action_table); });
}

const FiniteGroupoid& InstanceDoc::require_groupoid() const {
  if (!groupoid) throw SemanticError("command needs the groupoid section");
  return *groupoid;
}

const RelStructure& InstanceDoc::structure(const std::string& name) const {
  for (const auto& [n, s] : structures)
    if (n == name) return s;
  throw SemanticError("no structure named '" + name + "'");
}

const SeqInstance& InstanceDoc::sequence(const std::string& name) const {
  for (const auto& [n, s] : sequences)
    if (n == name) return s;
  throw SemanticError("no sequence named '" + name + "'");
}

// ---------------------------------------------------------------------------

json to_json(SmallSet s) { return s.to_vector(); }

json to_json(const Partition& p) { return sets_to(p); }

json to_json(const ValidationReport& r) {
  json items = json::array();
  for (const auto& v : r.violations) items.push_back({{"kind", v.kind}, {"detail", v.detail}, {"witness", v.witness}});
  return {{"valid", r.ok()}, {"violations", items}};
}

json to_json(const PointSetReport& r) {
  return {{"set", to_json(r.set)},          {"is_open", r.is_open},         {"is_closed", r.is_closed},
          {"is_dense", r.is_dense},         {"is_comeager", r.is_comeager}, {"is_meager", r.is_meager}};
}

json to_json(const TurbulenceReport& r) {
  json points = json::array();
  for (std::size_t x = 0; x < r.points.size(); ++x) {
    const auto& p = r.points[x];
    json failures = json::array();
    for (const auto& [u, v] : p.witness_failures) failures.push_back({{"U", to_json(u)}, {"V", to_json(v)}});
    points.push_back({{"point", x},
                      {"dense_orbit", p.dense_orbit},
                      {"turbulent", p.turbulent},
                      {"meager_orbit", p.meager_orbit},
                      {"witness_failures", failures}});
  }
  return {{"points", points}, {"preturbulent", r.preturbulent}, {"turbulent_action", r.turbulent_action}};
}

json to_json(const Strategy& s) {
  json choice = json::object();
  for (std::size_t p = 0; p < s.choice.size(); ++p)
    if (s.choice[p] >= 0) choice[std::to_string(p)] = s.choice[p];
  return {{"player", to_string(s.player)}, {"choice", choice}};
}

json to_json(const BeckerVerdict& v) {
  json j = {{"x", v.x}, {"y", v.y}, {"ii_wins", v.ii_wins}, {"arena_size", v.arena_size}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const HjorthVerdict& v) {
  json j = {{"x", v.x}, {"y", v.y}, {"ii_wins", v.ii_wins}, {"arena_size", v.arena_size}};
  j["rank"] = v.rank == unranked ? json(nullptr) : json(v.rank);
  return j;
}

json to_json(const OrbitQuotientGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"kind", to_string(g.kind)}, {"vertices", to_json(g.vertices)}, {"edges", edges}};
}

json to_json(const ObstructionReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json item = {{"set", to_json(c.set)}};
    item["witness"] = c.witness ? json({c.witness->first, c.witness->second}) : json(nullptr);
    cands.push_back(item);
  }
  json j = {{"verdict", r.verdict}, {"candidates", cands}};
  j["failing_set"] = r.failing_set ? to_json(*r.failing_set) : json(nullptr);
  return j;
}

std::string emit_dot(const OrbitQuotientGraph& g) {
  const bool directed = g.kind == GraphKind::becker;
  std::string out = std::string(directed ? "digraph " : "graph ") + to_string(g.kind) + " {\n";
  auto node = [&](int v) { return "\"" + std::to_string(g.vertices[static_cast<std::size_t>(v)].first()) + "\""; };
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out += "  " + node(static_cast<int>(v)) + " [label=\"" + g.vertices[v].str() + "\"];\n";
  for (const auto& [a, b] : g.edges)
    out += "  " + node(a) + (directed ? " -> " : " -- ") + node(b) + " [class=\"" + to_string(g.kind) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace orbitgames
