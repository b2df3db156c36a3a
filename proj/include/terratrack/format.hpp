#pragma once

#include <string>

namespace terratrack {

/// Shortest decimal form that round-trips the exact double. Locale-independent.
std::string format_full(double value);

/// Fixed number of significant digits, like printf %g. Locale-independent.
std::string format_sig(double value, int digits);

}  // namespace terratrack
