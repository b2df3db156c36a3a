#pragma once

#include <string>

#include "terratrack/config.hpp"
#include "terratrack/mission.hpp"
#include "terratrack/sweep.hpp"
#include "terratrack/traction.hpp"

namespace terratrack {

// Text renderings print 6 significant digits; CSV keeps full precision.
// Both use '.' decimals and LF line endings regardless of locale.

std::string render_text(const PerformanceReport& report, bool verbose = false);
std::string performance_csv_header();
std::string performance_csv_row(const PerformanceReport& report);

std::string render_text(const FeasibilityReport& report);
std::string feasibility_csv_header();
std::string feasibility_csv_row(const CheckResult& check);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
std::string render_summary(const SweepResult& result, Objective objective);

}  // namespace terratrack
