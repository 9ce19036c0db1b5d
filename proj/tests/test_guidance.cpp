#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glider/guidance.hpp"

#include <cmath>
#include <stdexcept>

using namespace glider;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("attitude schedule holds four 200 s blocks and a constant descent") {
    const Case1Reference a = case1_reference(100.0);
    CHECK(a.Z_d == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(a.Zdot_d == 0.1);
    CHECK(a.xi_d == doctest::Approx(-kPi / 4.0).epsilon(1e-15));
    CHECK(a.psi_d == doctest::Approx(kPi / 6.0).epsilon(1e-15));

    const Case1Reference b = case1_reference(250.0);
    CHECK(b.xi_d == doctest::Approx(-kPi / 3.0).epsilon(1e-15));
    CHECK(b.psi_d == 0.0);

    const Case1Reference c = case1_reference(450.0);
    CHECK(c.Z_d == doctest::Approx(45.0).epsilon(1e-14));
    CHECK(c.xi_d == doctest::Approx(-kPi / 4.0).epsilon(1e-15));
    CHECK(c.psi_d == doctest::Approx(-kPi / 6.0).epsilon(1e-15));

    const Case1Reference d = case1_reference(700.0);
    CHECK(d.xi_d == doctest::Approx(-kPi / 3.0).epsilon(1e-15));
    CHECK(d.psi_d == doctest::Approx(kPi / 10.0).epsilon(1e-15));

    SUBCASE("block edges switch exactly at the boundary") {
        CHECK(case1_reference(199.99).psi_d == doctest::Approx(kPi / 6.0));
        CHECK(case1_reference(200.0).psi_d == 0.0);
        CHECK(case1_reference(600.0).psi_d == doctest::Approx(kPi / 10.0));
    }

    SUBCASE("the last block holds beyond the nominal horizon") {
        CHECK(case1_reference(900.0).xi_d == doctest::Approx(-kPi / 3.0));
        CHECK(case1_reference(900.0).psi_d == doctest::Approx(kPi / 10.0));
        CHECK(case1_reference(900.0).Z_d == doctest::Approx(90.0));
    }
}

TEST_CASE("pitch reference adds the attack-angle correction") {
    CHECK(pitch_reference(-kPi / 4.0, 0.1) == doctest::Approx(-kPi / 4.0 + 0.1).epsilon(1e-15));
    CHECK(pitch_reference(0.0, 0.0) == 0.0);
}

TEST_CASE("segment azimuth") {
    CHECK(segment_azimuth(Vec2(0.0, 0.0), Vec2(10.0, 5.0)) ==
          doctest::Approx(0.4636476090008061).epsilon(1e-15));
    CHECK(segment_azimuth(Vec2(1.0, 1.0), Vec2(1.0, 4.0)) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(segment_azimuth(Vec2(3.0, 3.0), Vec2(3.0, 3.0)), std::invalid_argument);
}

TEST_CASE("cross-track distance sign convention") {
    const Vec2 a(0.0, 0.0), b(10.0, 0.0);

    // Path along +X: the offset is just the Y coordinate.
    CHECK(cross_track(Vec2(5.0, 1.0), a, b) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cross_track(Vec2(5.0, -2.0), a, b) == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(cross_track(Vec2(7.0, 0.0), a, b) == doctest::Approx(0.0).scale(1.0));

    // Diagonal path: on-path points have zero offset, off-path points the
    // perpendicular distance.
    const Vec2 d(10.0, 10.0);
    CHECK(std::abs(cross_track(Vec2(5.0, 5.0), a, d)) < 1e-12);
    CHECK(cross_track(Vec2(4.0, 6.0), a, d) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    // Independent of where along the segment the vehicle sits.
    CHECK(cross_track(Vec2(1.0, 3.0), a, b) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(cross_track(Vec2(9.0, 3.0), a, b) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("integral line-of-sight at a hand-computed operating point") {
    IlosState st;  // Lambda = 2.5, k_I = 0.01, zero integrator

    const IlosOutput out = ilos_step(st, 2.5, 0.01);
    CHECK(out.psi_d_rel == doctest::Approx(-kPi / 4.0).epsilon(1e-14));
    CHECK(out.sigma_dot == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(st.sigma_int == doctest::Approx(0.005).epsilon(1e-14));

    SUBCASE("zero cross-track error freezes the integrator but keeps its bias") {
        st.sigma_int = 40.0;
        const IlosOutput biased = ilos_step(st, 0.0, 0.01);
        CHECK(biased.sigma_dot == 0.0);
        CHECK(st.sigma_int == 40.0);
        CHECK(biased.psi_d_rel == doctest::Approx(-std::atan(40.0 * 0.01 / 2.5)).epsilon(1e-14));
    }
}

TEST_CASE("line-of-sight command and integrator respect their analytic bounds") {
    IlosState st;
    for (double y_e : {-50.0, -5.0, -0.3, 0.0, 0.2, 3.0, 80.0}) {
        for (double sigma : {-20.0, 0.0, 15.0}) {
            st.sigma_int = sigma;
            const IlosOutput out = ilos_step(st, y_e, 0.01);
            CHECK(std::abs(out.psi_d_rel) < kPi / 2.0);
            CHECK(std::abs(out.sigma_dot) <= std::abs(y_e) / st.los_distance + 1e-12);
        }
    }
}

TEST_CASE("waypoint switching radius is inclusive") {
    WaypointPlan plan;
    plan.waypoints = {Vec2(10.0, 5.0), Vec2(15.0, -10.0)};
    plan.radius = 5.0;

    CHECK_FALSE(waypoint_update(plan, Vec2(0.0, 0.0), 1.0));
    CHECK(plan.index == 0);

    // Just inside.
    CHECK(waypoint_update(plan, Vec2(10.1, 5.0), 2.0));
    CHECK(plan.index == 1);
    CHECK_FALSE(plan.complete);

    // Exactly on the circle of the (now current) second target.
    plan.index = 0;
    plan.waypoints = {Vec2(10.0, 5.0), Vec2(15.0, -10.0)};
    CHECK(waypoint_update(plan, Vec2(5.0, 5.0), 3.0));  // distance exactly 5
    CHECK(plan.index == 1);
}

TEST_CASE("path completion stamps the time and stops the plan") {
    WaypointPlan plan;
    plan.waypoints = {Vec2(0.0, 0.0), Vec2(10.0, 0.0)};
    plan.radius = 2.0;

    CHECK(waypoint_update(plan, Vec2(1.0, 0.0), 5.0));
    CHECK(plan.index == 1);
    CHECK_FALSE(plan.complete);

    CHECK(waypoint_update(plan, Vec2(9.0, 0.5), 42.0));
    CHECK(plan.complete);
    REQUIRE(plan.completion_time.has_value());
    CHECK(*plan.completion_time == 42.0);

    // A finished plan ignores further updates.
    CHECK_FALSE(waypoint_update(plan, Vec2(9.0, 0.5), 43.0));
    CHECK(*plan.completion_time == 42.0);
}

TEST_CASE("waypoint plan validation") {
    WaypointPlan plan;
    plan.waypoints = {Vec2(0.0, 0.0)};
    CHECK_THROWS_AS(plan.validate(), std::invalid_argument);

    plan.waypoints = {Vec2(0.0, 0.0), Vec2(1.0, 1.0)};
    CHECK_NOTHROW(plan.validate());

    plan.radius = 0.0;
    CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
    plan.radius = 5.0;

    plan.waypoints = {Vec2(0.0, 0.0), Vec2(1.0, 1.0), Vec2(1.0, 1.0)};
    CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
}
