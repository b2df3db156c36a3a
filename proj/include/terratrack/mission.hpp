#pragma once

#include <string>
#include <vector>

#include "terratrack/traction.hpp"

namespace terratrack {

enum class FireClass { A, B };
const char* to_string(FireClass cls);

/// Standardized fire-test footprint plus the robot's required standoff from
/// the outer edge. Class A tests are square wood cribs, class B circular
/// liquid pans.
struct FireTestSpec {
    FireClass fire_class = FireClass::A;
    double footprint = 0.0;  // square side (class A) or pan diameter (class B) [m]
    double height = 0.0;     // [m]
    double standoff = 0.0;   // centroid-to-outer-edge distance [m]

    void validate() const;
};

enum class ExtinguisherType { portable, wheeled };
const char* to_string(ExtinguisherType type);

struct TempRangeC {
    double lo = 0.0;  // [deg C]
    double hi = 0.0;  // [deg C]
};

struct ExtinguisherSpec {
    std::string model;
    ExtinguisherType type = ExtinguisherType::portable;
    std::string power;  // rating label, e.g. "20A/233B"
    double mass_kg = 0.0;
    double body_diameter = 0.0;   // [m]
    double body_height = 0.0;     // [m]
    double hose_length = 0.0;     // [m]
    double discharge_time = 0.0;  // [s]
    TempRangeC operating_temp;

    void validate() const;
};

/// End-effector envelope the robot must cover, per fire-test class. The
/// class B ceiling and edge-gap cells have no published requirement and the
/// corresponding checks report not-applicable.
struct ReachRequirements {
    double highest_point = 1.892;        // end-effector ceiling, class A [m]
    double lowest_point_a = 0.745;       // [m]
    double lowest_point_b = 0.635;       // [m]
    double longest_reach_a = 1.875;      // [m]
    double longest_reach_b = 2.255;      // [m]
    double shortest_edge_gap_a = 0.395;  // [m]
};

struct FeasibilityReport {
    std::vector<CheckResult> checks;

    // not_applicable rows do not fail the report
    bool all_passed() const;
};

/// Time to drive once around the test at constant standoff from its outer
/// edge. The offset path of a convex footprint is its perimeter plus
/// 2 pi standoff (full circle for class B). [s]
double circumnavigation_time(const FireTestSpec& test, double speed);

/// The loop around the fire must finish strictly before the agent runs out.
CheckResult discharge_budget_check(const FireTestSpec& test, double speed,
                                   const ExtinguisherSpec& ext);

/// Thrust must cover every resistance on the 30-degree slope. The report must
/// have been computed at theta = 30 deg.
CheckResult slope_climb_check(const PerformanceReport& report);

/// Row-by-row reach comparison for the given class; meeting a bound exactly
/// passes.
std::vector<CheckResult> reach_check(double robot_reach, double robot_max_height,
                                     const ReachRequirements& req, FireClass cls);

/// The extinguisher's operating range must cover the full -10..55 C band.
CheckResult temperature_check(const ExtinguisherSpec& ext);

}  // namespace terratrack
