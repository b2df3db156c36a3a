#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "terratrack/terrain.hpp"

#include "reference_fixture.hpp"

using namespace terratrack;

TEST_CASE("rankine_kp at the reference angles") {
    CHECK(rankine_kp(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rankine_kp(30.0) == doctest::Approx(3.0).epsilon(1e-12));
    // tan^2(59.5 deg), frozen from direct evaluation
    CHECK(rankine_kp(29.0) == doctest::Approx(2.8820600667).epsilon(1e-9));
    CHECK(std::abs(rankine_kp(29.0) - 2.8821) < 1e-3);
}

TEST_CASE("rankine_kp rejects out-of-range angles") {
    CHECK_THROWS_AS(rankine_kp(-1.0), std::domain_error);
    CHECK_THROWS_AS(rankine_kp(90.0), std::domain_error);
    CHECK_THROWS_AS(rankine_kp(120.0), std::domain_error);
}

TEST_CASE("rankine_kp is strictly increasing on [0, 89]") {
    double previous = rankine_kp(0.0);
    for (int deg = 1; deg <= 89; ++deg) {
        const double current = rankine_kp(static_cast<double>(deg));
        CHECK(current > previous);
        previous = current;
    }
}

TEST_CASE("sinkage modulus combines the cohesive and frictional terms") {
    CHECK(sinkage_modulus(reference_soil(), 0.18) ==
          doctest::Approx(1003.2888888888889).epsilon(1e-12));

    TerrainParams soil = reference_soil();
    soil.k_c = 0.0;
    soil.k_phi = 5.0;
    CHECK(sinkage_modulus(soil, 1.0) == doctest::Approx(5.0));

    soil.k_c = 2.0;
    soil.k_phi = 0.0;
    CHECK(sinkage_modulus(soil, 2.0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(sinkage_modulus(soil, 0.0), std::domain_error);
    CHECK_THROWS_AS(sinkage_modulus(soil, -0.1), std::domain_error);
}

TEST_CASE("ground pressure is W / 2bl in kPa") {
    CHECK(ground_pressure(2943.0, 0.18, 1.0) == doctest::Approx(8.175).epsilon(1e-12));
    CHECK(ground_pressure(0.0, 0.18, 1.0) == 0.0);
    CHECK(ground_pressure(2000.0, 0.5, 2.0) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(ground_pressure(100.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ground_pressure(100.0, 0.2, 0.0), std::domain_error);
    CHECK_THROWS_AS(ground_pressure(-1.0, 0.2, 1.0), std::domain_error);
}

TEST_CASE("static sinkage reproduces the reference value") {
    const TerrainParams soil = reference_soil();
    const double z = static_sinkage(8.175, soil, 0.18);
    CHECK(z == doctest::Approx(0.002448088977).epsilon(1e-9));
    // the reference table rounds to 0.0024
    CHECK(std::abs(z - 0.0024) / 0.0024 < 0.05);
}

TEST_CASE("static sinkage edge cases") {
    const TerrainParams soil = reference_soil();
    CHECK(static_sinkage(0.0, soil, 0.18) == 0.0);

    TerrainParams linear;
    linear.n = 1.0;
    linear.k_c = 0.0;
    linear.k_phi = 10.0;
    linear.c = 0.0;
    linear.phi_deg = 20.0;
    linear.gamma = 10.0;
    linear.K = 0.02;
    CHECK(static_sinkage(5.0, linear, 1.0) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(static_sinkage(-1.0, soil, 0.18), std::domain_error);

    TerrainParams hollow = linear;
    hollow.k_c = -20.0;  // makes k_c/b + k_phi negative at b = 1
    CHECK_THROWS_AS(static_sinkage(5.0, hollow, 1.0), std::domain_error);
}

TEST_CASE("static sinkage is strictly increasing in pressure and zero only at zero") {
    const TerrainParams soil = reference_soil();
    double previous = static_sinkage(0.0, soil, 0.18);
    CHECK(previous == 0.0);
    for (int step = 1; step <= 50; ++step) {
        const double p = 0.5 * step;
        const double z = static_sinkage(p, soil, 0.18);
        CHECK(z > previous);
        previous = z;
    }
}

TEST_CASE("pressure is invariant under W -> aW, l -> al") {
    const TerrainParams soil = reference_soil();
    for (const double alpha : {0.5, 2.0, 7.0}) {
        const double base = ground_pressure(2943.0, 0.18, 1.0);
        const double scaled = ground_pressure(2943.0 * alpha, 0.18, alpha);
        CHECK(scaled == doctest::Approx(base).epsilon(1e-12));
        CHECK(static_sinkage(scaled, soil, 0.18) ==
              doctest::Approx(static_sinkage(base, soil, 0.18)).epsilon(1e-12));
    }
}

TEST_CASE("terrain invariants are enforced") {
    TerrainParams soil = reference_soil();
    CHECK_NOTHROW(soil.validate());

    soil.n = 0.0;
    CHECK_THROWS_AS(soil.validate(), std::domain_error);
    soil = reference_soil();
    soil.K = 0.0;
    CHECK_THROWS_AS(soil.validate(), std::domain_error);
    soil = reference_soil();
    soil.c = -1.0;
    CHECK_THROWS_AS(soil.validate(), std::domain_error);
    soil = reference_soil();
    soil.gamma = -1.0;
    CHECK_THROWS_AS(soil.validate(), std::domain_error);
    soil = reference_soil();
    soil.phi_deg = 90.0;
    CHECK_THROWS_AS(soil.validate(), std::domain_error);
}

TEST_CASE("passive earth coefficient prefers the override") {
    const TerrainParams soil = reference_soil();
    CHECK(soil.passive_earth_coefficient() == doctest::Approx(rankine_kp(29.0)));
    CHECK_FALSE(soil.kp_is_override());

    const TerrainParams with_override = reference_soil_with_override();
    CHECK(with_override.passive_earth_coefficient() == 1.7);
    CHECK(with_override.kp_is_override());
}
