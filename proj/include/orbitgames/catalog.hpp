#pragma once

#include <string>
#include <vector>

#include "orbitgames/action.hpp"

namespace orbitgames {

struct NamedSpace {
  std::string name;
  FiniteSpace space;
};

struct NamedGroup {
  std::string name;
  TopGroup group;
};

struct CatalogEntry {
  std::string name;
  GroupAction action;
};

/// Curated topologies on at most four points.
std::vector<NamedSpace> curated_spaces();

/// 1, Z2, Z3, Z2×Z2 and S3, each with every chain of normal subgroups from
/// the whole group down to {1} or stopping early (non-Hausdorff).
std::vector<NamedGroup> catalog_groups();

/// Every action of `group` on `space` (as permutation tables) that passes
/// GroupAction::validate, without duplicates, in a fixed order.
std::vector<GroupAction> all_actions(const TopGroup& group, const FiniteSpace& space);

inline constexpr std::size_t catalog_cap = 5000;

/// Catalogs: "all", "discrete", "sierpinski", "indiscrete", "fixtures".
/// Throws std::invalid_argument on an unknown name.
std::vector<CatalogEntry> build_catalog(const std::string& name = "all");

std::vector<std::string> catalog_names();

/// Small named fixtures used in docs and tests:
/// "sierpinski-trivial", "indiscrete2-trivial", "discrete2-trivial",
/// "z2-swap", "z2-trivial-action", "z3-rotation".
GroupAction fixture(const std::string& name);

}  // namespace orbitgames
