#pragma once

#include <functional>

namespace terratrack {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // accumulated bound over accepted intervals
};

/// Adaptive Simpson integration of f over [lo, hi] with interval halving.
///
/// Each interval is accepted when the Richardson estimate of its local error
/// fits its share of abs_tol; otherwise it is split, down to max_depth
/// halvings. Throws NumericsError (carrying the last two estimates) if an
/// interval still misses its tolerance at the cap.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol = 1e-9, int max_depth = 30);

}  // namespace terratrack
