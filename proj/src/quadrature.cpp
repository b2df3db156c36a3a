#include "terratrack/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "terratrack/errors.hpp"

namespace terratrack {
namespace {

struct Adaptive {
    const std::function<double(double)>& f;
    int max_depth;
    double error_acc = 0.0;

    // a < m < b with fa/fm/fb already evaluated; whole = Simpson over [a, b].
    double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                  int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol) {
            error_acc += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        if (depth >= max_depth) {
            std::ostringstream msg;
            msg << "adaptive Simpson quadrature did not converge after " << max_depth
                << " halvings on [" << a << ", " << b << "]";
            throw NumericsError(msg.str(), whole, left + right);
        }
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol, int max_depth) {
    if (lo == hi) {
        return {0.0, 0.0};
    }
    const double fa = f(lo);
    const double fb = f(hi);
    const double fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);

    Adaptive state{f, max_depth};
    const double value = state.refine(lo, hi, fa, fm, fb, whole, abs_tol, 0);
    return {value, state.error_acc};
}

}  // namespace terratrack
