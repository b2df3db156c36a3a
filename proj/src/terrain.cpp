#include "terratrack/terrain.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "terratrack/units.hpp"

namespace terratrack {
namespace {

[[noreturn]] void fail(const char* field, const char* what, double got) {
    std::ostringstream msg;
    msg << "TerrainParams." << field << " " << what << " (got " << got << ")";
    throw std::domain_error(msg.str());
}

}  // namespace

void TerrainParams::validate() const {
    if (!(n > 0.0)) fail("n", "must be > 0", n);
    if (!(K > 0.0)) fail("K", "must be > 0", K);
    if (!(c >= 0.0)) fail("c", "must be >= 0", c);
    if (!(gamma >= 0.0)) fail("gamma", "must be >= 0", gamma);
    if (!(phi_deg >= 0.0 && phi_deg < 90.0)) fail("phi", "must be in [0, 90)", phi_deg);
    if (kp_override && !(*kp_override > 0.0)) fail("kp_override", "must be > 0", *kp_override);
    if (mu_t && !(*mu_t > 0.0)) fail("mu_t", "must be > 0", *mu_t);
    if (f_r && !(*f_r >= 0.0)) fail("f_r", "must be >= 0", *f_r);
}

double TerrainParams::passive_earth_coefficient() const {
    return kp_override ? *kp_override : rankine_kp(phi_deg);
}

double rankine_kp(double phi_deg) {
    if (!(phi_deg >= 0.0 && phi_deg < 90.0)) {
        std::ostringstream msg;
        msg << "rankine_kp: friction angle must be in [0, 90) deg (got " << phi_deg << ")";
        throw std::domain_error(msg.str());
    }
    const double t = std::tan(std::numbers::pi / 4.0 + deg_to_rad(phi_deg) / 2.0);
    return t * t;
}

double sinkage_modulus(const TerrainParams& soil, double track_width) {
    if (!(track_width > 0.0)) {
        throw std::domain_error("sinkage_modulus: track width must be > 0");
    }
    return soil.k_c / track_width + soil.k_phi;
}

double ground_pressure(double weight_n, double track_width, double contact_length) {
    if (!(track_width > 0.0) || !(contact_length > 0.0)) {
        throw std::domain_error("ground_pressure: track width and contact length must be > 0");
    }
    if (!(weight_n >= 0.0)) {
        throw std::domain_error("ground_pressure: weight must be >= 0");
    }
    const double pa = weight_n / (2.0 * track_width * contact_length);
    return pa / 1000.0;
}

double static_sinkage(double pressure_kpa, const TerrainParams& soil, double track_width) {
    if (!(pressure_kpa >= 0.0)) {
        throw std::domain_error("static_sinkage: pressure must be >= 0");
    }
    const double k = sinkage_modulus(soil, track_width);
    if (!(k > 0.0)) {
        throw std::domain_error("static_sinkage: sinkage modulus k_c/b + k_phi must be > 0");
    }
    return std::pow(pressure_kpa / k, 1.0 / soil.n);
}

}  // namespace terratrack
