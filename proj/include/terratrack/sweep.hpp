#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "terratrack/mission.hpp"
#include "terratrack/traction.hpp"

namespace terratrack {

/// Variables the design sweep can range over, in the lexicographic order
/// used for grid enumeration and tie-breaking.
enum class SweepVar : int { b = 0, l, B, v, m, i };
inline constexpr std::size_t kSweepVarCount = 6;

const char* to_string(SweepVar var);
std::optional<SweepVar> sweep_var_from_string(const std::string& name);

/// Inclusive range lo..hi walked in increments of step.
struct VarRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;

    std::size_t count() const;
    double at(std::size_t index) const;  // clamped to hi
};

enum class Objective { max_acceleration, max_drawbar_pull };
const char* to_string(Objective objective);

struct ConstraintSet {
    bool pitch_ratio = false;
    bool steering = false;
    bool slope_climb = false;
    bool time_budget = false;
};

struct DesignSpace {
    // Ranged variables, indexed by SweepVar; unset entries stay at the base
    // geometry/state value.
    std::array<std::optional<VarRange>, kSweepVarCount> ranges;

    Objective objective = Objective::max_acceleration;
    ConstraintSet constraints;
    std::size_t cap = 10'000'000;  // maximum grid size

    // Golden-section refinement along one ranged variable after the grid.
    std::optional<SweepVar> refine;
};

enum class FailedCheck : std::uint8_t { none, pitch_ratio, steering, slope_climb, time_budget };
const char* to_string(FailedCheck check);

/// One grid point, compact enough to dump by the million.
struct SweepRow {
    double b = 0.0, l = 0.0, B = 0.0, v = 0.0, m = 0.0, i = 0.0;
    double z_o = 0.0;
    double R_in = 0.0, R_b = 0.0, R_c = 0.0, R_g = 0.0;
    double F = 0.0, drawbar_pull = 0.0, a = 0.0;
    bool feasible = false;
    FailedCheck failed = FailedCheck::none;  // first constraint that failed
    double objective = 0.0;                  // NaN when infeasible
};

/// Fixed context a sweep runs in. Mission fields are required only when the
/// time-budget constraint is enabled.
struct SweepEnv {
    TerrainParams soil;
    TrackGeometry base_geom;
    VehicleOperatingState base_state;
    EvaluateOptions eval;
    std::optional<FireTestSpec> fire_test;
    std::optional<ExtinguisherSpec> extinguisher;
};

struct RefineOutcome {
    SweepVar var = SweepVar::b;
    double value = 0.0;      // refined coordinate
    double objective = 0.0;  // feasible objective at the refined point
    SweepRow row;
};

struct SweepResult {
    std::size_t total = 0;
    std::size_t feasible_count = 0;

    // Grid optimum; absent when nothing is feasible (a reported outcome, not
    // an error).
    std::optional<SweepRow> best;
    std::optional<PerformanceReport> best_report;
    std::optional<FeasibilityReport> best_feasibility;

    std::optional<RefineOutcome> refined;
};

/// Called once per grid point, always in lexicographic (b,l,B,v,m,i) order
/// regardless of how evaluation was scheduled.
using RowSink = std::function<void(const SweepRow&)>;

struct SweepOptions {
    unsigned threads = 1;

    // Scheduling self-check: evaluate chunks in a permuted order. Output
    // order and content are unchanged; sinks still see lexicographic order.
    bool shuffle_evaluation = false;
    std::uint64_t shuffle_seed = 1;
};

/// Exhaustively evaluates the grid, filters by the enabled constraints in the
/// fixed order pitch -> steering -> slope -> time, and returns the feasible
/// objective argmax (lexicographically first on ties). Throws ConfigError
/// when the grid exceeds the cap or required context is missing.
SweepResult sweep(const DesignSpace& space, const SweepEnv& env, const SweepOptions& opts = {},
                  const RowSink& sink = {});

}  // namespace terratrack
