#include "terratrack/presets.hpp"

#include "terratrack/errors.hpp"

namespace terratrack::presets {
namespace {

TerrainParams paper_soft_soil() {
    TerrainParams soil;
    soil.n = 0.8;
    soil.k_c = 16.54;    // kN/m^(n+1)
    soil.k_phi = 911.4;  // kN/m^(n+2)
    soil.c = 6.89;       // kPa
    soil.phi_deg = 29.0;
    soil.gamma = 15.0;  // kN/m^3
    soil.K = 0.025;     // m
    return soil;
}

TrackGeometry paper_chassis() {
    TrackGeometry geom;
    geom.b = 0.18;
    geom.l = 1.0;  // contact length consistent with the reference outputs
    geom.B = 0.8;
    geom.P = 0.155;
    geom.RD = 0.19;
    geom.RS = 0.23;
    geom.D = 0.18;
    geom.delta_pct = 62.0;
    return geom;
}

std::vector<ExtinguisherSpec> make_extinguishers() {
    auto ext = [](std::string model, ExtinguisherType type, std::string power, double mass_kg,
                  double diameter_m, double height_m, double hose_m, double discharge_s,
                  double temp_lo, double temp_hi) {
        ExtinguisherSpec e;
        e.model = std::move(model);
        e.type = type;
        e.power = std::move(power);
        e.mass_kg = mass_kg;
        e.body_diameter = diameter_m;
        e.body_height = height_m;
        e.hose_length = hose_m;
        e.discharge_time = discharge_s;
        e.operating_temp = {temp_lo, temp_hi};
        return e;
    };
    using ET = ExtinguisherType;
    return {
        ext("EXT-ABC-4K", ET::portable, "21A/133B", 6.1, 0.138, 0.44, 0.5, 15.0, -20.0, 60.0),
        ext("MFZL4-ABC", ET::portable, "2A/55B", 5.5, 0.13, 0.48, 0.4, 13.0, -20.0, 55.0),
        ext("MFZL8-ABC", ET::portable, "4A/89B", 10.0, 0.13, 0.565, 0.5, 15.0, -20.0, 55.0),
        ext("MFZL10-ABC", ET::wheeled, "20A/233B", 45.0, 0.46, 0.92, 3.0, 20.0, -20.0, 55.0),
        ext("EXT-CO2-5K", ET::portable, "55B", 16.8, 0.152, 0.67, 0.5, 15.0, -20.0, 60.0),
        ext("CO2-MT24", ET::wheeled, "233B", 90.0, 0.22, 1.33, 3.0, 25.0, -20.0, 55.0),
        ext("EXT-ABC-25K", ET::wheeled, "20A/89B", 50.0, 0.252, 0.88, 5.0, 20.0, -20.0, 60.0),
        ext("EXT-ABC-50K", ET::wheeled, "20A/233B", 83.0, 0.30, 1.00, 5.0, 25.0, -20.0, 60.0),
    };
}

}  // namespace

TerrainParams terrain(const std::string& name) {
    if (name == "paper-soft-soil") return paper_soft_soil();
    throw ConfigError("unknown terrain preset '" + name + "' (available: paper-soft-soil)");
}

TrackGeometry chassis(const std::string& name) {
    if (name == "paper-chassis") return paper_chassis();
    throw ConfigError("unknown chassis preset '" + name + "' (available: paper-chassis)");
}

const std::vector<ExtinguisherSpec>& extinguishers() {
    static const std::vector<ExtinguisherSpec> all = make_extinguishers();
    return all;
}

ExtinguisherSpec extinguisher(const std::string& model) {
    for (const auto& e : extinguishers()) {
        if (e.model == model) return e;
    }
    std::string names;
    for (const auto& e : extinguishers()) {
        if (!names.empty()) names += ", ";
        names += e.model;
    }
    throw ConfigError("unknown extinguisher '" + model + "' (available: " + names + ")");
}

FireTestSpec fire_test(FireClass cls) {
    FireTestSpec test;
    test.fire_class = cls;
    if (cls == FireClass::A) {
        test.footprint = 1.27;  // square side [m]
        test.height = 1.725;
        test.standoff = 1.698;
    } else {
        test.footprint = 3.0;  // pan diameter [m]
        test.height = 0.203;
        test.standoff = 1.338;
    }
    return test;
}

ReachRequirements reach_requirements() { return {}; }

std::vector<std::string> terrain_names() { return {"paper-soft-soil"}; }

std::vector<std::string> chassis_names() { return {"paper-chassis"}; }

}  // namespace terratrack::presets
