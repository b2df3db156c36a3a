#pragma once

#include <stdexcept>
#include <string>

namespace terratrack {

// Bad user input: config syntax, unknown keys, missing data, preset names.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical routine gave up (quadrature did not converge within its
// subdivision cap). Carries the last two estimates so callers can judge
// how far apart they were. The CLI maps this to exit code 3.
class NumericsError : public std::runtime_error {
  public:
    NumericsError(const std::string& msg, double previous, double last)
        : std::runtime_error(msg), previous_estimate(previous), last_estimate(last) {}

    double previous_estimate;
    double last_estimate;
};

}  // namespace terratrack
