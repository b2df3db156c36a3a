#include <cmath>
#include <numbers>

#include <doctest.h>

#include "terratrack/errors.hpp"
#include "terratrack/quadrature.hpp"

using namespace terratrack;

TEST_CASE("adaptive Simpson integrates smooth functions") {
    const auto cubic = [](double x) { return x * x * x - 2.0 * x + 1.0; };
    // antiderivative x^4/4 - x^2 + x over [0, 2] -> 4 - 4 + 2
    CHECK(integrate_adaptive(cubic, 0.0, 2.0).value == doctest::Approx(2.0).epsilon(1e-12));

    const auto sine = [](double x) { return std::sin(x); };
    CHECK(integrate_adaptive(sine, 0.0, std::numbers::pi).value ==
          doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("empty interval integrates to zero") {
    CHECK(integrate_adaptive([](double) { return 42.0; }, 1.0, 1.0).value == 0.0);
}

TEST_CASE("error estimate bounds the true error") {
    const auto f = [](double x) { return std::exp(-x * x); };
    const QuadratureResult coarse = integrate_adaptive(f, 0.0, 3.0, 1e-6);
    const QuadratureResult fine = integrate_adaptive(f, 0.0, 3.0, 1e-12);
    CHECK(std::abs(coarse.value - fine.value) <= 1e-6);
    CHECK(coarse.error_estimate <= 1e-6);
}

TEST_CASE("depth cap raises NumericsError carrying the last two estimates") {
    // A jump discontinuity cannot meet an impossible tolerance.
    const auto step = [](double x) { return x < 0.5 ? 0.0 : 1.0; };
    try {
        integrate_adaptive(step, 0.0, 1.0, 1e-16, 12);
        FAIL("expected NumericsError");
    } catch (const NumericsError& e) {
        CHECK(std::isfinite(e.previous_estimate));
        CHECK(std::isfinite(e.last_estimate));
        CHECK(e.previous_estimate != e.last_estimate);
    }
}
