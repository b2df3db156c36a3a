#include "terratrack/mission.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace terratrack {
namespace {

constexpr double kTempRequiredLo = -10.0;  // [deg C]
constexpr double kTempRequiredHi = 55.0;   // [deg C]

CheckResult make_check(std::string name, bool pass, double measured, std::string requirement,
                       double margin) {
    return {std::move(name), pass ? CheckStatus::pass : CheckStatus::fail, measured,
            std::move(requirement), margin};
}

}  // namespace

const char* to_string(FireClass cls) { return cls == FireClass::A ? "A" : "B"; }

const char* to_string(ExtinguisherType type) {
    return type == ExtinguisherType::portable ? "portable" : "wheeled";
}

void FireTestSpec::validate() const {
    if (!(footprint > 0.0) || !(height > 0.0)) {
        throw std::domain_error("FireTestSpec: footprint dimensions must be > 0");
    }
    if (!(standoff > 0.0)) {
        throw std::domain_error("FireTestSpec: standoff must be > 0");
    }
}

void ExtinguisherSpec::validate() const {
    if (!(discharge_time > 0.0)) {
        throw std::domain_error("ExtinguisherSpec: discharge time must be > 0");
    }
    if (!(operating_temp.lo < operating_temp.hi)) {
        throw std::domain_error("ExtinguisherSpec: operating temperature range is empty");
    }
}

bool FeasibilityReport::all_passed() const {
    for (const auto& check : checks) {
        if (check.status == CheckStatus::fail) return false;
    }
    return true;
}

double circumnavigation_time(const FireTestSpec& test, double speed) {
    if (!(speed > 0.0)) {
        throw std::domain_error("circumnavigation_time: speed must be > 0");
    }
    test.validate();
    double path = 0.0;
    if (test.fire_class == FireClass::A) {
        path = 4.0 * test.footprint + 2.0 * std::numbers::pi * test.standoff;
    } else {
        const double radius = test.footprint / 2.0;
        path = 2.0 * std::numbers::pi * (radius + test.standoff);
    }
    return path / speed;
}

CheckResult discharge_budget_check(const FireTestSpec& test, double speed,
                                   const ExtinguisherSpec& ext) {
    const double time = circumnavigation_time(test, speed);
    std::ostringstream req;
    req << "< " << ext.discharge_time << " s (" << ext.model << ")";
    return make_check("time_budget", time < ext.discharge_time, time, req.str(),
                      ext.discharge_time - time);
}

CheckResult slope_climb_check(const PerformanceReport& report) {
    if (std::abs(report.state.theta_deg - 30.0) > 1e-9) {
        throw std::invalid_argument(
            "slope_climb_check: report must be computed at a 30 deg grade");
    }
    return make_check("slope_climb", report.a >= 0.0, report.a, "a >= 0 m/s^2 at 30 deg",
                      report.a);
}

std::vector<CheckResult> reach_check(double robot_reach, double robot_max_height,
                                     const ReachRequirements& req, FireClass cls) {
    if (!(robot_reach > 0.0) || !(robot_max_height > 0.0)) {
        throw std::domain_error("reach_check: robot reach and height must be > 0");
    }
    std::vector<CheckResult> out;

    const double longest = cls == FireClass::A ? req.longest_reach_a : req.longest_reach_b;
    std::ostringstream reach_req;
    reach_req << ">= " << longest << " m";
    out.push_back(make_check("reach_longest", robot_reach >= longest, robot_reach,
                             reach_req.str(), robot_reach - longest));

    if (cls == FireClass::A) {
        std::ostringstream height_req;
        height_req << ">= " << req.highest_point << " m";
        out.push_back(make_check("reach_height", robot_max_height >= req.highest_point,
                                 robot_max_height, height_req.str(),
                                 robot_max_height - req.highest_point));
    } else {
        // No published ceiling for class B.
        out.push_back({"reach_height", CheckStatus::not_applicable, robot_max_height,
                       "no class B requirement", 0.0});
    }
    return out;
}

CheckResult temperature_check(const ExtinguisherSpec& ext) {
    const double lo_margin = kTempRequiredLo - ext.operating_temp.lo;
    const double hi_margin = ext.operating_temp.hi - kTempRequiredHi;
    const double margin = std::min(lo_margin, hi_margin);
    std::ostringstream req;
    req << "covers [" << kTempRequiredLo << ", " << kTempRequiredHi << "] C";
    return make_check("temperature", margin >= 0.0, margin, req.str(), margin);
}

}  // namespace terratrack
