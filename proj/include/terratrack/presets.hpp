#pragma once

#include <string>
#include <vector>

#include "terratrack/chassis.hpp"
#include "terratrack/mission.hpp"
#include "terratrack/terrain.hpp"

namespace terratrack::presets {

/// Built-in terrain by name. `paper-soft-soil` is the bundled soft-soil
/// parameter set the reference scenario runs on. Throws ConfigError for
/// unknown names.
TerrainParams terrain(const std::string& name);

/// Built-in chassis by name. `paper-chassis` is the bundled reference
/// geometry; its contact length is 1.0 m (see README for the provenance
/// note on that value). Throws ConfigError for unknown names.
TrackGeometry chassis(const std::string& name);

/// One of the bundled commercial extinguishers, by model name.
ExtinguisherSpec extinguisher(const std::string& model);

const std::vector<ExtinguisherSpec>& extinguishers();

/// Standard fire-test footprint and robot standoff for the class.
FireTestSpec fire_test(FireClass cls);

ReachRequirements reach_requirements();

std::vector<std::string> terrain_names();
std::vector<std::string> chassis_names();

}  // namespace terratrack::presets
