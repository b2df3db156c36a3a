#include "terratrack/traction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "terratrack/errors.hpp"
#include "terratrack/units.hpp"

namespace terratrack {
namespace {

// Re-throws component failures with the pipeline stage named so callers can
// tell which quantity could not be computed.
template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return std::forward<Fn>(fn)();
    } catch (const NumericsError& e) {
        throw NumericsError(std::string(name) + ": " + e.what(), e.previous_estimate,
                            e.last_estimate);
    } catch (const std::domain_error& e) {
        throw std::domain_error(std::string(name) + ": " + e.what());
    }
}

std::string format_band(const RatioBand& band) {
    std::ostringstream out;
    out << "in [" << band.lo << ", " << band.hi << "]";
    return out.str();
}

}  // namespace

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "n/a";
    }
}

const char* to_string(KpSource source) {
    return source == KpSource::formula ? "formula" : "override";
}

double soil_thrust(double contact_area_m2, const TerrainParams& soil, double weight_n, double slip,
                   double contact_length) {
    if (!(contact_area_m2 > 0.0) || !(contact_length > 0.0)) {
        throw std::domain_error("soil_thrust: contact area and length must be > 0");
    }
    if (!(slip > 0.0 && slip <= 1.0)) {
        throw std::domain_error("soil_thrust: slip ratio must be in (0, 1]");
    }
    if (!(soil.K > 0.0)) {
        throw std::domain_error("soil_thrust: shear deformation modulus K must be > 0");
    }
    const double ceiling =
        contact_area_m2 * kpa_to_pa(soil.c) + weight_n * std::tan(deg_to_rad(soil.phi_deg));
    const double u = slip * contact_length / soil.K;
    const double bracket = 1.0 - (1.0 / u) * (1.0 - std::exp(-u));
    return ceiling * bracket;
}

double acceleration(double thrust_n, double r_b, double r_c, double r_in, double r_g,
                    double mass_kg) {
    if (!(mass_kg > 0.0)) {
        throw std::domain_error("acceleration: mass must be > 0");
    }
    return (thrust_n - r_b - r_c - r_in - r_g) / mass_kg;
}

PerformanceReport evaluate(const TrackGeometry& geom, const TerrainParams& soil,
                           const VehicleOperatingState& state, const EvaluateOptions& opts) {
    stage("geometry", [&] { geom.validate(); return 0; });
    stage("terrain", [&] { soil.validate(); return 0; });
    stage("state", [&] { state.validate(); return 0; });

    PerformanceReport r;
    r.geom = geom;
    r.soil = soil;
    r.state = state;
    r.rc_mode = opts.compaction;

    r.W = state.weight();
    r.p = stage("ground_pressure", [&] { return ground_pressure(r.W, geom.b, geom.l); });
    r.k = stage("sinkage_modulus", [&] { return sinkage_modulus(soil, geom.b); });
    r.K_p = stage("passive_earth_coefficient",
                  [&] { return soil.passive_earth_coefficient(); });
    r.kp_source = soil.kp_is_override() ? KpSource::override_value : KpSource::formula;
    r.z_o = stage("static_sinkage", [&] { return static_sinkage(r.p, soil, geom.b); });

    r.R_in = internal_resistance(r.W, state.v);
    r.R_b = stage("bulldozing_resistance",
                  [&] { return bulldozing_resistance(r.z_o, soil, geom.b); });
    const CompactionResult rc = stage("compaction_resistance", [&] {
        return compaction_resistance(r.z_o, soil, geom, state.i, opts.compaction);
    });
    r.R_c = rc.force_n;
    r.rc_quadrature_error = rc.quadrature_error;
    r.R_g = grade_resistance(r.W, state.theta_deg);

    const double area = stage("contact_area", [&] { return contact_area(geom); });
    r.F = stage("soil_thrust",
                [&] { return soil_thrust(area, soil, r.W, state.i, geom.l); });
    r.drawbar_pull = r.F - (r.R_in + r.R_b + r.R_c);
    r.a = acceleration(r.F, r.R_b, r.R_c, r.R_in, r.R_g, state.m);

    const PitchRatioResult pitch = roadwheel_pitch_ratio(geom, opts.pitch_band);
    r.checks.push_back({"pitch_ratio",
                        pitch.pass ? CheckStatus::pass : CheckStatus::fail, pitch.ratio,
                        format_band(pitch.band),
                        std::min(pitch.ratio - pitch.band.lo, pitch.band.hi - pitch.ratio)});

    if (soil.mu_t && soil.f_r) {
        const SteeringResult st = steering_check(geom, soil, r.p);
        std::ostringstream req;
        req << "l/B <= " << st.limit;
        r.checks.push_back({"steering", st.pass ? CheckStatus::pass : CheckStatus::fail,
                            st.ratio, req.str(), st.margin});
    } else {
        r.checks.push_back({"steering", CheckStatus::not_applicable, 0.0,
                            "needs terrain mu_t and f_r", 0.0});
    }

    r.checks.push_back({"thrust_margin", r.a >= 0.0 ? CheckStatus::pass : CheckStatus::fail,
                        r.F, "F >= total resistance", r.F - r.total_resistance()});

    return r;
}

}  // namespace terratrack
