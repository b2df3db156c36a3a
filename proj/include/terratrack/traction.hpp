#pragma once

#include <string>
#include <vector>

#include "terratrack/chassis.hpp"
#include "terratrack/resistance.hpp"
#include "terratrack/terrain.hpp"

namespace terratrack {

enum class CheckStatus { pass, fail, not_applicable };
const char* to_string(CheckStatus status);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::not_applicable;
    double measured = 0.0;
    std::string requirement;  // rendered bound, e.g. ">= 1.875 m"
    double margin = 0.0;      // positive when satisfied with room to spare
};

enum class KpSource { formula, override_value };
const char* to_string(KpSource source);

/// Everything the longitudinal pipeline computes for one configuration,
/// together with the inputs it was computed from. Deterministic: identical
/// inputs give identical reports.
struct PerformanceReport {
    TrackGeometry geom;
    TerrainParams soil;
    VehicleOperatingState state;

    double W = 0.0;    // vehicle weight [N]
    double p = 0.0;    // ground pressure [kPa]
    double k = 0.0;    // sinkage modulus [kN/m^(n+2)]
    double K_p = 0.0;  // passive earth coefficient [-]
    KpSource kp_source = KpSource::formula;

    double z_o = 0.0;   // static sinkage [m]
    double R_in = 0.0;  // internal resistance [N]
    double R_b = 0.0;   // bulldozing resistance [N]
    double R_c = 0.0;   // compaction resistance [N]
    double R_g = 0.0;   // grade resistance [N]
    CompactionMode rc_mode = CompactionMode::bekker_classic;
    double rc_quadrature_error = 0.0;

    double F = 0.0;             // soil thrust, vehicle total [N]
    double drawbar_pull = 0.0;  // F - (R_in + R_b + R_c), grade excluded [N]
    double a = 0.0;             // acceleration [m/s^2], negative when infeasible

    std::vector<CheckResult> checks;  // pitch_ratio, steering, thrust_margin

    double total_resistance() const { return R_in + R_b + R_c + R_g; }
};

/// Soil thrust transmittable through track shear:
/// (A c + W tan phi) [1 - K/(i l) (1 - e^{-i l / K})], c in Pa. [N]
double soil_thrust(double contact_area_m2, const TerrainParams& soil, double weight_n, double slip,
                   double contact_length);

/// Longitudinal force balance solved for acceleration:
/// (F - R_b - R_c - R_in - R_g) / m. Negative results are returned, not raised.
double acceleration(double thrust_n, double r_b, double r_c, double r_in, double r_g,
                    double mass_kg);

struct EvaluateOptions {
    CompactionMode compaction = CompactionMode::bekker_classic;
    RatioBand pitch_band;
};

/// Runs the full pipeline W -> p -> z_o -> resistances -> F -> a and fills
/// every report field. Component errors propagate with the failing stage
/// named in the message.
PerformanceReport evaluate(const TrackGeometry& geom, const TerrainParams& soil,
                           const VehicleOperatingState& state, const EvaluateOptions& opts = {});

}  // namespace terratrack
