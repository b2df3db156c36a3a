#pragma once

#include <optional>

namespace terratrack {

/// Soft-soil constitutive parameters, stored in the units soil tables print:
/// sinkage moduli in kN, cohesion in kPa, unit weight in kN/m^3, angles in
/// degrees. Conversions to N/Pa happen inside the force formulas.
struct TerrainParams {
    double n = 0.0;        // sinkage exponent [-]
    double k_c = 0.0;      // cohesive sinkage modulus [kN/m^(n+1)]
    double k_phi = 0.0;    // frictional sinkage modulus [kN/m^(n+2)]
    double c = 0.0;        // cohesion [kPa]
    double phi_deg = 0.0;  // internal friction angle [deg]
    double gamma = 0.0;    // soil unit weight [kN/m^3]
    double K = 0.0;        // shear deformation modulus [m]

    std::optional<double> mu_t;  // coefficient of lateral resistance [-] (steering only)
    std::optional<double> f_r;   // coefficient of longitudinal resistance [-] (steering only)

    // Fixed passive earth coefficient. When set it wins over the Rankine
    // formula everywhere the coefficient is consumed.
    std::optional<double> kp_override;

    void validate() const;  // throws std::domain_error naming the bad field

    double passive_earth_coefficient() const;
    bool kp_is_override() const { return kp_override.has_value(); }
};

/// Rankine passive earth pressure coefficient tan^2(pi/4 + phi/2).
/// phi in degrees, 0 <= phi < 90.
double rankine_kp(double phi_deg);

/// Combined sinkage modulus k_c/b + k_phi for a track of width b. [kN/m^(n+2)]
double sinkage_modulus(const TerrainParams& soil, double track_width);

/// Uniform normal pressure under both tracks, W / (2 b l). [kPa]
double ground_pressure(double weight_n, double track_width, double contact_length);

/// Static sinkage (p / k)^(1/n) of a track of width b under pressure p. [m]
double static_sinkage(double pressure_kpa, const TerrainParams& soil, double track_width);

}  // namespace terratrack
