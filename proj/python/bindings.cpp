#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitgames/catalog.hpp"
#include "orbitgames/io.hpp"
#include "orbitgames/models.hpp"
#include "orbitgames/orbit_games.hpp"

namespace py = pybind11;
using namespace orbitgames;

// Point and arrow sets cross the boundary as frozensets; any iterable of ints is accepted.
namespace pybind11::detail {
template <>
struct type_caster<SmallSet> {
  PYBIND11_TYPE_CASTER(SmallSet, const_name("frozenset[int]"));

  bool load(handle src, bool) {
    if (!src || PyUnicode_Check(src.ptr()) || !py::isinstance<py::iterable>(src)) return false;
    SmallSet out;
    for (auto item : py::reinterpret_borrow<py::iterable>(src)) {
      if (!py::isinstance<py::int_>(item)) return false;
      const long v = item.cast<long>();
      if (v < 0 || v >= 64) throw py::value_error("set element " + std::to_string(v) + " outside 0..63");
      out.insert(static_cast<int>(v));
    }
    value = out;
    return true;
  }

  static handle cast(SmallSet s, return_value_policy, handle) {
    py::list items;
    for (int v : s.to_vector()) items.append(v);
    return PyFrozenSet_New(items.ptr());
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return std::move(out);
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return std::move(out);
    }
  }
}

template <typename T>
py::object report(const T& value) {
  return to_python(to_json(value));
}

py::object verdict(const BeckerVerdict& v) { return report(v); }
py::object verdict(const HjorthVerdict& v) { return report(v); }

SeqInstance seq(const std::vector<std::string>& entries) { return SeqInstance(entries); }

py::object arena_result(const SolveResult& r) {
  py::list winners, ranks;
  for (std::size_t p = 0; p < r.winner.size(); ++p) {
    winners.append(to_string(r.winner[p]));
    if (r.rank[p] == unranked)
      ranks.append(py::none());
    else
      ranks.append(r.rank[p]);
  }
  py::dict out;
  out["winner"] = winners;
  out["rank"] = ranks;
  return std::move(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Becker and Hjorth games on finite group actions, groupoids and structures.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);

  py::enum_<Player>(m, "Player").value("I", Player::I).value("II", Player::II);

  py::class_<FiniteSpace>(m, "FiniteSpace")
      .def(py::init<int, std::vector<SmallSet>>(), py::arg("n_points"), py::arg("basis"))
      .def_static("discrete", &FiniteSpace::discrete)
      .def_static("indiscrete", &FiniteSpace::indiscrete)
      .def_static("sierpinski", &FiniteSpace::sierpinski)
      .def_property_readonly("n_points", &FiniteSpace::n_points)
      .def_property_readonly("basis", &FiniteSpace::basis)
      .def("core_open", &FiniteSpace::core_open)
      .def("closure", &FiniteSpace::closure)
      .def("interior", &FiniteSpace::interior)
      .def("is_open", &FiniteSpace::is_open)
      .def("is_closed", &FiniteSpace::is_closed)
      .def("is_dense", &FiniteSpace::is_dense)
      .def("is_discrete", &FiniteSpace::is_discrete)
      .def("category_report", [](const FiniteSpace& s, SmallSet a) { return report(s.category_report(a)); })
      .def("validate", [](const FiniteSpace& s) { return report(s.validate()); })
      .def("__eq__", [](const FiniteSpace& a, const FiniteSpace& b) { return a == b; });

  py::class_<TopGroup>(m, "TopGroup")
      .def(py::init<int, std::vector<std::vector<int>>, int, std::vector<int>, std::vector<SmallSet>>(),
           py::arg("order"), py::arg("mult"), py::arg("identity"), py::arg("inverse"), py::arg("filter_chain"))
      .def_static("trivial", &TopGroup::trivial)
      .def_static("cyclic", &TopGroup::cyclic)
      .def_static("klein", &TopGroup::klein)
      .def_static("symmetric3", &TopGroup::symmetric3)
      .def("with_chain", &TopGroup::with_chain)
      .def_property_readonly("order", &TopGroup::order)
      .def_property_readonly("identity", &TopGroup::identity)
      .def_property_readonly("filter_chain", &TopGroup::filter_chain)
      .def("mult", &TopGroup::mult)
      .def("inverse", &TopGroup::inverse)
      .def("is_hausdorff", &TopGroup::is_hausdorff)
      .def("validate", [](const TopGroup& g) { return report(g.validate()); });

  py::class_<GroupAction>(m, "GroupAction")
      .def(py::init<TopGroup, FiniteSpace, std::vector<std::vector<int>>>(), py::arg("group"), py::arg("space"),
           py::arg("table"))
      .def_static("trivial_on", &GroupAction::trivial_on)
      .def_property_readonly("group", &GroupAction::group)
      .def_property_readonly("space", &GroupAction::space)
      .def_property_readonly("table", &GroupAction::table)
      .def("apply", &GroupAction::apply)
      .def("orbit", &GroupAction::orbit)
      .def("orbit_partition", &GroupAction::orbit_partition)
      .def("validate", [](const GroupAction& a) { return report(a.validate()); })
      .def("__eq__", [](const GroupAction& a, const GroupAction& b) { return a == b; });

  py::class_<FiniteGroupoid>(m, "FiniteGroupoid")
      .def_property_readonly("n_arrows", &FiniteGroupoid::n_arrows)
      .def_property_readonly("objects", &FiniteGroupoid::objects)
      .def_property_readonly("basis", &FiniteGroupoid::basis)
      .def("src", &FiniteGroupoid::src)
      .def("rng", &FiniteGroupoid::rng)
      .def("inv", &FiniteGroupoid::inv)
      .def("comp", [](const FiniteGroupoid& g, int a, int b) -> py::object {
        const int c = g.comp(a, b);
        if (c < 0) return py::none();
        return py::int_(c);
      })
      .def("object_space", &FiniteGroupoid::object_space)
      .def("__eq__", [](const FiniteGroupoid& a, const FiniteGroupoid& b) { return a == b; });

  m.def("action_groupoid", &action_groupoid);
  m.def("action_arrow", &action_arrow);
  m.def("restrict_groupoid", &restrict_groupoid);
  m.def("validate_groupoid", [](const FiniteGroupoid& g) { return report(validate_groupoid(g)); });
  m.def("groupoid_local_orbit", &groupoid_local_orbit);
  m.def("groupoid_orbit_partition", &groupoid_orbit_partition);

  py::class_<Arena>(m, "Arena")
      .def(py::init<>())
      .def("add_position", &Arena::add_position, py::arg("owner"), py::arg("safe"), py::arg("label") = "")
      .def("add_move", &Arena::add_move)
      .def_readwrite("initial", &Arena::initial)
      .def_property_readonly("size", &Arena::size)
      .def_readonly("labels", &Arena::labels)
      .def("moves", [](const Arena& a, int p) { return a.moves.at(static_cast<std::size_t>(p)); });
  m.def("solve_closed_game", [](const Arena& a) { return arena_result(solve_closed_game(a)); });
  m.def("bounded_play_check", [](const Arena& a, int depth) { return to_string(bounded_play_check(a, depth)); });

  m.def("local_orbit", &local_orbit, py::arg("action"), py::arg("x"), py::arg("U"), py::arg("V"));
  m.def("turbulence_report", [](const GroupAction& a) { return report(turbulence_report(a)); });
  m.def("becker_arena", py::overload_cast<const GroupAction&, int, int, bool>(&becker_arena), py::arg("action"),
        py::arg("x"), py::arg("y"), py::arg("full_choice") = false);
  m.def("hjorth_arena", py::overload_cast<const GroupAction&, int, int, bool>(&hjorth_arena), py::arg("action"),
        py::arg("x"), py::arg("y"), py::arg("full_choice") = false);
  m.def("becker_embeddable", [](const GroupAction& a, int x, int y) { return verdict(becker_embeddable(a, x, y)); });
  m.def("becker_embeddable", [](const FiniteGroupoid& g, int x, int y) { return verdict(becker_embeddable(g, x, y)); });
  m.def("hjorth_isomorphic", [](const GroupAction& a, int x, int y) { return verdict(hjorth_isomorphic(a, x, y)); });
  m.def("hjorth_isomorphic", [](const FiniteGroupoid& g, int x, int y) { return verdict(hjorth_isomorphic(g, x, y)); });
  m.def("becker_relation", py::overload_cast<const GroupAction&, bool>(&becker_relation), py::arg("action"),
        py::arg("full_choice") = false);
  m.def("hjorth_relation", py::overload_cast<const GroupAction&, bool>(&hjorth_relation), py::arg("action"),
        py::arg("full_choice") = false);
  m.def("becker_digraph", [](const GroupAction& a) { return report(becker_digraph(a)); });
  m.def("hjorth_graph", [](const GroupAction& a) { return report(hjorth_graph(a)); });
  m.def("becker_digraph", [](const FiniteGroupoid& g) { return report(becker_digraph(g)); });
  m.def("hjorth_graph", [](const FiniteGroupoid& g) { return report(hjorth_graph(g)); });
  m.def("dot", [](const GroupAction& a, const std::string& kind) {
    if (kind != "becker" && kind != "hjorth") throw py::value_error("kind must be 'becker' or 'hjorth'");
    return emit_dot(kind == "becker" ? becker_digraph(a) : hjorth_graph(a));
  }, py::arg("action"), py::arg("kind") = "becker");
  m.def("cli_obstruction_check", [](const GroupAction& a) { return report(cli_obstruction_check(a)); });
  m.def("cli_obstruction_check", [](const FiniteGroupoid& g) { return report(cli_obstruction_check(g)); });

  m.def("fixture", &fixture);
  m.def("catalog_names", &catalog_names);
  m.def("build_catalog", [](const std::string& name) {
    std::vector<std::pair<std::string, GroupAction>> out;
    for (auto& e : build_catalog(name)) out.emplace_back(std::move(e.name), std::move(e.action));
    return out;
  }, py::arg("name") = "all");
  m.def("load_action", [](const std::string& text) { return parse_instance(text).action(); });
  m.def("dump_action", [](const std::string& name, const GroupAction& a) {
    return emit_instance(instance_from_action(name, a));
  });

  py::class_<RelStructure>(m, "RelStructure")
      .def_static("digraph", &RelStructure::digraph, py::arg("universe_size"), py::arg("edges"))
      .def_property_readonly("universe_size", &RelStructure::universe_size)
      .def("induced", &RelStructure::induced);
  m.def("f_embedding_exists", [](const RelStructure& a, const RelStructure& b) { return f_embedding_exists(a, b).exists; });
  m.def("isomorphism_exists", [](const RelStructure& a, const RelStructure& b) { return isomorphism_exists(a, b).exists; });
  m.def("logic_becker_game", &logic_becker_game);
  m.def("logic_hjorth_game", &logic_hjorth_game);

  m.def("eq_plus", [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    return eq_plus(seq(x), seq(y));
  });
  m.def("ran_subset", [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    return ran_subset(seq(x), seq(y));
  });
  m.def("symbolic_becker_seq", [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    return symbolic_becker_seq(seq(x), seq(y));
  });
  m.def("diag_reduction_check", [](const std::vector<std::string>& l, const std::vector<std::string>& mu) {
    const auto r = diag_reduction_check(seq(l), seq(mu));
    py::dict out;
    out["eq_plus"] = r.eq_plus;
    out["conjugate"] = r.conjugate;
    out["agree"] = r.agree;
    out["permutation"] = r.permutation ? py::cast(*r.permutation) : py::none();
    return out;
  });
}
