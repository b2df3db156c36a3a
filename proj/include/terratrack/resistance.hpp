#pragma once

#include "terratrack/chassis.hpp"
#include "terratrack/terrain.hpp"

namespace terratrack {

struct VehicleOperatingState {
    double m = 0.0;          // vehicle mass [kg]
    double v = 0.0;          // forward speed [m/s]
    double i = 0.0;          // slip ratio [-], in (0, 1]
    double theta_deg = 0.0;  // grade angle [deg]
    double g = 9.81;         // gravitational acceleration [m/s^2]

    void validate() const;  // throws std::domain_error naming the bad field

    double weight() const { return m * g; }  // [N]
};

/// Selects how the compaction term is computed. `bekker_classic` is the
/// closed-form pressure-sinkage work term b k z^(n+1)/(n+1); `verbatim_eq8`
/// evaluates the slip-sinkage integrand over the contact length by adaptive
/// quadrature. The two disagree by orders of magnitude on typical soils, so
/// reports always name the active mode.
enum class CompactionMode { bekker_classic, verbatim_eq8 };

const char* to_string(CompactionMode mode);

/// Running-gear losses (track pins, sprocket engagement, roadwheel rolling):
/// W/1000 * (133 + 9 v), W in newtons. [N]
double internal_resistance(double weight_n, double speed);

/// Soil pushed ahead of the sunken tracks. Closed form of
/// 2 b * integral_0^z (gamma Kp z' + 2 c sqrt(Kp)) dz', with gamma in N/m^3
/// and c in Pa. Kp resolves through the terrain override rule. [N]
double bulldozing_resistance(double sinkage_m, const TerrainParams& soil, double track_width);

struct CompactionResult {
    double force_n = 0.0;
    double quadrature_error = 0.0;  // achieved bound; 0 in classic mode
    CompactionMode mode = CompactionMode::bekker_classic;
};

/// Work lost compacting soil to the static sinkage depth. See CompactionMode
/// for the two formulations; slip only enters the verbatim integrand.
CompactionResult compaction_resistance(double sinkage_m, const TerrainParams& soil,
                                       const TrackGeometry& geom, double slip,
                                       CompactionMode mode);

/// Weight component along a slope, W sin(theta). [N]
double grade_resistance(double weight_n, double theta_deg);

}  // namespace terratrack
