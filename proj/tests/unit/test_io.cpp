#include "doctest.h"

#include "orbitgames/catalog.hpp"
#include "orbitgames/io.hpp"

using namespace orbitgames;

TEST_CASE("instance round trip") {
  const auto doc = instance_from_action("swap", fixture("z2-swap"));
  const std::string text = emit_instance(doc);
  const auto back = parse_instance(text);
  CHECK(back == doc);
  CHECK(emit_instance(back) == text);
  CHECK(back.action() == fixture("z2-swap"));
}

TEST_CASE("groupoid, structures and sequences survive a round trip") {
  InstanceDoc doc;
  doc.name = "mixed";
  doc.groupoid = action_groupoid(fixture("z3-rotation"));
  doc.language = Language{{"E", 2}};
  doc.structures.emplace_back("edge", RelStructure::digraph(2, {{0, 1}, {1, 0}}));
  doc.sequences.emplace_back("y", SeqInstance({"c", "a", "b"}));
  const auto back = parse_instance(emit_instance(doc));
  CHECK(back == doc);
  CHECK(back.structure("edge").universe_size() == 2);
  CHECK(back.sequence("y").size() == 3);
  CHECK_THROWS_AS(back.sequence("nope"), SemanticError);
  CHECK_THROWS_AS(back.action(), SemanticError);
}

TEST_CASE("parse errors and semantic errors are distinguished") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance("[]"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"space": {"n_points": "two", "basis": []}})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"space": {"n_points": 2, "basis": [[0, 5]]}})"), SemanticError);
  const auto doc = parse_instance(R"({"space": {"n_points": 2, "basis": [[0], [1]]}})");
  CHECK(doc.space->is_discrete());
  CHECK_THROWS_AS(doc.require_groupoid(), SemanticError);
}

TEST_CASE("DOT output") {
  const std::string expected =
      "digraph becker {\n"
      "  \"0\" [label=\"{0}\"];\n"
      "  \"1\" [label=\"{1}\"];\n"
      "  \"0\" -> \"0\" [class=\"becker\"];\n"
      "  \"0\" -> \"1\" [class=\"becker\"];\n"
      "  \"1\" -> \"1\" [class=\"becker\"];\n"
      "}\n";
  CHECK(emit_dot(becker_digraph(fixture("sierpinski-trivial"))) == expected);

  const std::string loops = emit_dot(hjorth_graph(fixture("discrete2-trivial")));
  CHECK(loops.rfind("graph hjorth {\n", 0) == 0);
  CHECK(loops.find("\"0\" -- \"0\"") != std::string::npos);
  CHECK(loops.find("\"1\" -- \"1\"") != std::string::npos);
  CHECK(loops.find("\"0\" -- \"1\"") == std::string::npos);
}

TEST_CASE("structured outputs") {
  CHECK(to_json(becker_embeddable(fixture("sierpinski-trivial"), 0, 1)).dump() ==
        R"({"arena_size":)" + std::to_string(becker_embeddable(fixture("sierpinski-trivial"), 0, 1).arena_size) +
            R"(,"ii_wins":true,"witness":0,"x":0,"y":1})");
  CHECK(to_json(cli_obstruction_check(fixture("sierpinski-trivial"))).dump() ==
        R"({"candidates":[{"set":[1],"witness":null},{"set":[0,1],"witness":[0,1]}],"failing_set":[1],"verdict":false})");
}

TEST_CASE("property: every catalog instance round-trips byte for byte") {
  for (const auto& entry : build_catalog("all")) {
    const auto doc = instance_from_action(entry.name, entry.action);
    const std::string text = emit_instance(doc);
    const auto back = parse_instance(text);
    REQUIRE_MESSAGE(back == doc, entry.name);
    CHECK(emit_instance(back) == text);
  }
}
