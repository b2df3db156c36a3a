#include "terratrack/chassis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "terratrack/errors.hpp"
#include "terratrack/units.hpp"

namespace terratrack {
namespace {

[[noreturn]] void fail(const char* field, double got) {
    std::ostringstream msg;
    msg << "TrackGeometry." << field << " must be > 0 (got " << got << ")";
    throw std::domain_error(msg.str());
}

}  // namespace

void TrackGeometry::validate() const {
    if (!(b > 0.0)) fail("b", b);
    if (!(l > 0.0)) fail("l", l);
    if (!(B > 0.0)) fail("B", B);
    if (!(P > 0.0)) fail("P", P);
    if (!(RD > 0.0)) fail("RD", RD);
}

std::vector<std::string> TrackGeometry::warnings() const {
    std::vector<std::string> out;
    if (B <= b) {
        std::ostringstream msg;
        msg << "tread B = " << B << " m does not exceed track width b = " << b
            << " m; the track centerlines overlap the shoes";
        out.push_back(msg.str());
    }
    return out;
}

PitchRatioResult roadwheel_pitch_ratio(const TrackGeometry& geom, const RatioBand& band) {
    if (!(geom.P > 0.0)) {
        throw std::domain_error("roadwheel_pitch_ratio: track pitch P must be > 0");
    }
    PitchRatioResult out;
    out.ratio = geom.RD / geom.P;
    out.band = band;
    out.pass = out.ratio >= band.lo && out.ratio <= band.hi;
    return out;
}

double contact_area(const TrackGeometry& geom) {
    if (!(geom.b > 0.0) || !(geom.l > 0.0)) {
        throw std::domain_error("contact_area: b and l must be > 0");
    }
    return 2.0 * geom.b * geom.l;
}

SteeringResult steering_check(const TrackGeometry& geom, const TerrainParams& soil,
                              double pressure_kpa) {
    if (!soil.mu_t || !soil.f_r) {
        throw ConfigError(
            "steering_check: terrain must provide mu_t and f_r "
            "(coefficients of lateral and longitudinal resistance)");
    }
    if (!(pressure_kpa > 0.0)) {
        throw std::domain_error("steering_check: ground pressure must be > 0");
    }
    if (!(geom.B > 0.0)) {
        throw std::domain_error("steering_check: tread B must be > 0");
    }
    SteeringResult out;
    out.ratio = geom.l / geom.B;
    out.limit = (2.0 / *soil.mu_t) *
                (soil.c / pressure_kpa + std::tan(deg_to_rad(soil.phi_deg)) - *soil.f_r);
    out.pass = out.ratio <= out.limit;
    out.margin = out.limit - out.ratio;
    return out;
}

}  // namespace terratrack
