#pragma once

#include <numbers>

namespace terratrack {

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double kpa_to_pa(double kpa) { return kpa * 1000.0; }
inline constexpr double kn_to_n(double kn) { return kn * 1000.0; }

}  // namespace terratrack
