#pragma once

#include <string>
#include <vector>

#include "terratrack/terrain.hpp"

namespace terratrack {

/// Track and chassis dimensions. RS, D and delta_pct are carried through to
/// reports but enter no formula.
struct TrackGeometry {
    double b = 0.0;   // track shoe width [m]
    double l = 0.0;   // soil-track contact length [m]
    double B = 0.0;   // tread, lateral distance between track centerlines [m]
    double P = 0.0;   // track pitch [m]
    double RD = 0.0;  // roadwheel diameter [m]
    double RS = 0.0;  // roadwheel spacing [m]
    double D = 0.0;   // sprocket diameter [m]

    double delta_pct = 0.0;  // speed fluctuation [%], reported only

    void validate() const;  // throws std::domain_error naming the bad field

    // Unusual-but-representable conditions, reported as warnings rather
    // than rejected.
    std::vector<std::string> warnings() const;
};

struct RatioBand {
    double lo = 1.1;
    double hi = 1.3;
};

struct PitchRatioResult {
    double ratio = 0.0;  // RD / P
    bool pass = false;
    RatioBand band;
};

/// Roadwheel-diameter to track-pitch design ratio, nominally about 1.2 for
/// low-speed tracked vehicles. Pass means the ratio sits inside `band`.
PitchRatioResult roadwheel_pitch_ratio(const TrackGeometry& geom, const RatioBand& band = {});

/// Ground contact area of both tracks, 2 b l. [m^2]
double contact_area(const TrackGeometry& geom);

struct SteeringResult {
    double ratio = 0.0;   // l / B
    double limit = 0.0;   // (2 / mu_t) (c / p + tan(phi) - f_r)
    bool pass = false;    // ratio <= limit
    double margin = 0.0;  // limit - ratio
};

/// Skid-steering criterion: the contact-length to tread ratio must not exceed
/// the soil-dependent limit or the outer track spins in place. Requires mu_t
/// and f_r on the terrain (ConfigError otherwise) and p > 0.
SteeringResult steering_check(const TrackGeometry& geom, const TerrainParams& soil,
                              double pressure_kpa);

}  // namespace terratrack
