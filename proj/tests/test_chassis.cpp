#include <stdexcept>

#include <doctest.h>

#include "terratrack/chassis.hpp"
#include "terratrack/errors.hpp"

#include "reference_fixture.hpp"

using namespace terratrack;

namespace {

TerrainParams steering_soil() {
    TerrainParams soil = reference_soil();
    soil.mu_t = 0.5;
    soil.f_r = 0.1;
    return soil;
}

}  // namespace

TEST_CASE("roadwheel pitch ratio with the reference dimensions") {
    const PitchRatioResult ref = roadwheel_pitch_ratio(reference_geom());
    CHECK(ref.ratio == doctest::Approx(1.2258064516).epsilon(1e-10));
    CHECK(ref.pass);

    TrackGeometry geom = reference_geom();
    geom.RD = 0.1;
    geom.P = 0.1;
    const PitchRatioResult unity = roadwheel_pitch_ratio(geom);
    CHECK(unity.ratio == doctest::Approx(1.0));
    CHECK_FALSE(unity.pass);

    geom.RD = 0.24;
    geom.P = 0.2;
    const PitchRatioResult nominal = roadwheel_pitch_ratio(geom);
    CHECK(nominal.ratio == doctest::Approx(1.2));
    CHECK(nominal.pass);

    geom.P = 0.0;
    CHECK_THROWS_AS(roadwheel_pitch_ratio(geom), std::domain_error);
}

TEST_CASE("pitch ratio is homogeneous of degree zero") {
    TrackGeometry geom = reference_geom();
    const double base = roadwheel_pitch_ratio(geom).ratio;
    for (const double alpha : {0.5, 2.0, 10.0}) {
        TrackGeometry scaled = geom;
        scaled.RD *= alpha;
        scaled.P *= alpha;
        CHECK(roadwheel_pitch_ratio(scaled).ratio == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("contact area covers both tracks") {
    CHECK(contact_area(reference_geom()) == doctest::Approx(0.36).epsilon(1e-12));

    TrackGeometry geom = reference_geom();
    geom.b = 0.5;
    geom.l = 2.0;
    CHECK(contact_area(geom) == doctest::Approx(2.0));
    geom.b = 1.0;
    geom.l = 1.0;
    CHECK(contact_area(geom) == doctest::Approx(2.0));
}

TEST_CASE("steering check against the reference soil") {
    const SteeringResult result = steering_check(reference_geom(), steering_soil(), 8.175);
    CHECK(result.ratio == doctest::Approx(1.25));
    CHECK(result.limit == doctest::Approx(5.18849).epsilon(1e-5));
    CHECK(result.pass);
    CHECK(result.margin == doctest::Approx(result.limit - 1.25));
}

TEST_CASE("steering degenerate limit fails any positive ratio") {
    TerrainParams soil = steering_soil();
    soil.c = 0.0;
    soil.phi_deg = 0.0;
    soil.f_r = 0.0;
    soil.mu_t = 1e9;
    const SteeringResult result = steering_check(reference_geom(), soil, 8.175);
    CHECK(result.limit == doctest::Approx(0.0));
    CHECK_FALSE(result.pass);
}

TEST_CASE("steering verdict is invariant under (l, B) -> (al, aB)") {
    const TerrainParams soil = steering_soil();
    const SteeringResult base = steering_check(reference_geom(), soil, 8.175);
    for (const double alpha : {0.5, 2.0, 10.0}) {
        TrackGeometry scaled = reference_geom();
        scaled.l *= alpha;
        scaled.B *= alpha;
        const SteeringResult result = steering_check(scaled, soil, 8.175);
        CHECK(result.ratio == doctest::Approx(base.ratio).epsilon(1e-12));
        CHECK(result.pass == base.pass);
    }
}

TEST_CASE("steering limit monotonicity") {
    const TerrainParams soil = steering_soil();
    const TrackGeometry geom = reference_geom();
    const double base = steering_check(geom, soil, 8.175).limit;

    TerrainParams richer = soil;
    richer.c += 2.0;
    CHECK(steering_check(geom, richer, 8.175).limit > base);

    TerrainParams steeper = soil;
    steeper.phi_deg += 5.0;
    CHECK(steering_check(geom, steeper, 8.175).limit > base);

    TerrainParams stickier = soil;
    stickier.mu_t = *soil.mu_t * 2.0;
    CHECK(steering_check(geom, stickier, 8.175).limit < base);

    TerrainParams draggier = soil;
    draggier.f_r = *soil.f_r + 0.2;
    CHECK(steering_check(geom, draggier, 8.175).limit < base);

    CHECK(steering_check(geom, soil, 16.35).limit < base);
}

TEST_CASE("steering requires mu_t, f_r and positive pressure") {
    CHECK_THROWS_AS(steering_check(reference_geom(), reference_soil(), 8.175), ConfigError);
    CHECK_THROWS_AS(steering_check(reference_geom(), steering_soil(), 0.0),
                    std::domain_error);
}

TEST_CASE("geometry invariants and warnings") {
    TrackGeometry geom = reference_geom();
    CHECK_NOTHROW(geom.validate());
    CHECK(geom.warnings().empty());

    geom.b = -0.1;
    CHECK_THROWS_AS(geom.validate(), std::domain_error);

    TrackGeometry overlapping = reference_geom();
    overlapping.B = overlapping.b;  // tread not wider than a single shoe
    CHECK_NOTHROW(overlapping.validate());
    CHECK(overlapping.warnings().size() == 1);
}
