#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "orbitgames/action.hpp"
#include "orbitgames/game.hpp"
#include "orbitgames/groupoid.hpp"
#include "orbitgames/models.hpp"
#include "orbitgames/orbit_games.hpp"

namespace orbitgames {

/// Malformed document: bad JSON, missing fields, wrong types.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed document describing an impossible instance (indices out of
/// range, a section the command needs is absent, violated invariants).
class SemanticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One instance document. Every section is optional; commands ask for what
/// they need and get a SemanticError if it is missing.
struct InstanceDoc {
  std::string name;
  std::optional<FiniteSpace> space;
  std::optional<TopGroup> group;
  std::optional<std::vector<std::vector<int>>> action_table;
  std::optional<FiniteGroupoid> groupoid;
  std::optional<Language> language;
  std::vector<std::pair<std::string, RelStructure>> structures;
  std::vector<std::pair<std::string, SeqInstance>> sequences;

  GroupAction action() const;
  const FiniteGroupoid& require_groupoid() const;
  const RelStructure& structure(const std::string& name) const;
  const SeqInstance& sequence(const std::string& name) const;

  bool operator==(const InstanceDoc&) const = default;
};

InstanceDoc parse_instance(const std::string& text);
InstanceDoc instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const InstanceDoc& doc);
/// Two-space indented JSON with a trailing newline.
std::string emit_instance(const InstanceDoc& doc);

InstanceDoc instance_from_action(const std::string& name, const GroupAction& action);

nlohmann::json to_json(SmallSet s);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const PointSetReport& r);
nlohmann::json to_json(const TurbulenceReport& r);
nlohmann::json to_json(const BeckerVerdict& v);
nlohmann::json to_json(const HjorthVerdict& v);
nlohmann::json to_json(const OrbitQuotientGraph& g);
nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const Strategy& s);

/// Deterministic DOT text: one node per orbit named by its least member,
/// "->" edges for Becker digraphs and "--" edges for Hjorth graphs.
std::string emit_dot(const OrbitQuotientGraph& g);

}  // namespace orbitgames
