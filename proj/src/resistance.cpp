#include "terratrack/resistance.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "terratrack/quadrature.hpp"
#include "terratrack/units.hpp"

namespace terratrack {
namespace {

[[noreturn]] void fail(const char* field, const char* what, double got) {
    std::ostringstream msg;
    msg << "VehicleOperatingState." << field << " " << what << " (got " << got << ")";
    throw std::domain_error(msg.str());
}

}  // namespace

void VehicleOperatingState::validate() const {
    if (!(m > 0.0)) fail("m", "must be > 0", m);
    if (!(v >= 0.0)) fail("v", "must be >= 0", v);
    if (!(i > 0.0 && i <= 1.0)) fail("i", "must be in (0, 1]", i);
    if (!(theta_deg >= 0.0 && theta_deg < 90.0)) fail("theta", "must be in [0, 90)", theta_deg);
    if (!(g > 0.0)) fail("g", "must be > 0", g);
}

const char* to_string(CompactionMode mode) {
    return mode == CompactionMode::bekker_classic ? "bekker-classic" : "verbatim-eq8";
}

double internal_resistance(double weight_n, double speed) {
    return weight_n / 1000.0 * (133.0 + 9.0 * speed);
}

double bulldozing_resistance(double sinkage_m, const TerrainParams& soil, double track_width) {
    const double kp = soil.passive_earth_coefficient();
    const double gamma_npm3 = kn_to_n(soil.gamma);
    const double c_pa = kpa_to_pa(soil.c);
    return 2.0 * track_width *
           (gamma_npm3 * kp * sinkage_m * sinkage_m / 2.0 +
            2.0 * c_pa * std::sqrt(kp) * sinkage_m);
}

CompactionResult compaction_resistance(double sinkage_m, const TerrainParams& soil,
                                       const TrackGeometry& geom, double slip,
                                       CompactionMode mode) {
    CompactionResult out;
    out.mode = mode;
    if (sinkage_m == 0.0) {
        return out;
    }

    const double k_npm = kn_to_n(sinkage_modulus(soil, geom.b));
    const double n1 = soil.n + 1.0;
    const double classic = geom.b * k_npm * std::pow(sinkage_m, n1) / n1;

    if (mode == CompactionMode::bekker_classic) {
        out.force_n = classic;
        return out;
    }

    // Slip-sinkage form: the per-length prefactor classic/l scales an
    // integral of (78 - 2.78 e^{-0.009 (i x)^{1.77}})^(n+1) over the contact.
    const double prefactor = classic / geom.l;
    auto integrand = [&](double x) {
        const double s = 78.0 - 2.78 * std::exp(-0.009 * std::pow(slip * x, 1.77));
        return prefactor * std::pow(s, n1);
    };
    const QuadratureResult q = integrate_adaptive(integrand, 0.0, geom.l);
    out.force_n = q.value;
    out.quadrature_error = q.error_estimate;
    return out;
}

double grade_resistance(double weight_n, double theta_deg) {
    return weight_n * std::sin(deg_to_rad(theta_deg));
}

}  // namespace terratrack
