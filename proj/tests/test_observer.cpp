#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glider/dynamics.hpp"
#include "glider/observer.hpp"

#include <cmath>
#include <stdexcept>

using namespace glider;

TEST_CASE("default observer gains match the shipped set") {
    const ObserverGains g = ObserverGains::defaults();
    const Vec6 iota1 = (Vec6() << 0.001, 0.001, 0.01, 0.01, 0.01, 0.01).finished();
    const Vec6 iota2 = (Vec6() << 0.01, 0.01, 0.1, 0.1, 0.1, 0.1).finished();
    const Vec6 varsigma = (Vec6() << 18.0, 18.0, 18.0, 180.0, 180.0, 180.0).finished();
    CHECK(g.iota1 == iota1);
    CHECK(g.iota2 == iota2);
    CHECK(g.varsigma == varsigma);
    CHECK_NOTHROW(g.validate());
}

TEST_CASE("gain validation rejects non-positive entries") {
    ObserverGains g = ObserverGains::defaults();
    g.iota1[2] = 0.0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);

    g = ObserverGains::defaults();
    g.varsigma[5] = -1.0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("admissible-gain set membership covers both branches") {
    // Small-iota1 branch: iota1 <= 2 sqrt(dot_dM) requires
    // iota2 > iota1^2/4 + 4 dot_dM^2 / iota1^2  (= 4.25 for iota1 = 1, dot_dM = 1).
    CHECK(gain_set_valid(1.0, 5.0, 1.0));
    CHECK_FALSE(gain_set_valid(1.0, 4.0, 1.0));
    CHECK(gain_set_valid(1.0, 4.2500001, 1.0));
    CHECK_FALSE(gain_set_valid(1.0, 4.25, 1.0));  // the bound is strict

    // Boundary iota1 = 2 sqrt(dot_dM): still the first branch, bound = 2.
    CHECK(gain_set_valid(2.0, 4.26, 1.0));
    CHECK_FALSE(gain_set_valid(2.0, 1.9, 1.0));

    // Large-iota1 branch: only iota2 > dot_dM is required.
    CHECK(gain_set_valid(3.0, 1.5, 1.0));
    CHECK_FALSE(gain_set_valid(3.0, 0.9, 1.0));

    // Degenerate inputs are never admissible.
    CHECK_FALSE(gain_set_valid(0.0, 5.0, 1.0));
    CHECK_FALSE(gain_set_valid(1.0, 0.0, 1.0));
    CHECK_FALSE(gain_set_valid(1.0, 5.0, 0.0));
}

TEST_CASE("estimate starts at zero and reports its error signal") {
    const ObserverState fresh;
    CHECK(fresh.d_hat().cwiseAbs().maxCoeff() == 0.0);

    Vec6 d = Vec6::Constant(0.3), dh = Vec6::Constant(0.1);
    CHECK((estimate_error_signal(d, dh) - Vec6::Constant(0.2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("correction terms follow the printed signed-power forms") {
    // Configure axis 0 so the velocity-scaled estimation error Pi equals 4
    // with varsigma = 1; then
    //   rho    = -iota1 (sig^1/2(4) + sig^3/2(4)) = -10 iota1
    //   varphi = -iota2 (2*4 + 1.5*16 + 0.5)      = -32.5 iota2.
    const GliderParams plant;
    const ModeledParams mod = modeled_params(plant, UncertaintyConfig{0.0});
    const Vec6 pose = Vec6::Zero();
    const Vec3 U = Vec3::Zero();

    ObserverGains gains = ObserverGains::defaults();
    gains.varsigma = Vec6::Ones();
    gains.iota2 = Vec6::Constant(0.2);

    ObserverState obs;
    Vec6 nu = Vec6::Zero();
    nu[0] = 4.0 / mod.for_M.mass_diag()[0];  // Pi[0] = M (nu - varpi) = 4

    SUBCASE("integral rate is the printed varphi") {
        const ObserverRates r = observer_rhs(gains, obs, mod, pose, nu, U);
        CHECK(r.Phi_dot[0] == doctest::Approx(-32.5 * 0.2).epsilon(1e-12));
        CHECK(r.Phi_dot[1] == 0.0);  // sign(0) = 0 kills every term
    }

    SUBCASE("velocity-estimate rate carries -rho/M") {
        // Difference in iota1 isolates the rho term in varpi_dot.
        ObserverGains a = gains, b = gains;
        a.iota1[0] = 0.05;
        b.iota1[0] = 0.002;
        const Vec6 ra = observer_rhs(a, obs, mod, pose, nu, U).varpi_dot;
        const Vec6 rb = observer_rhs(b, obs, mod, pose, nu, U).varpi_dot;
        const double expected = (0.05 - 0.002) * 10.0 / mod.for_M.mass_diag()[0];
        CHECK(ra[0] - rb[0] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("locked-on observer reproduces the modeled acceleration") {
    // With varpi = nu and Phi = 0 every correction term vanishes, so the
    // observer integrates exactly the modeled (disturbance-free) plant.
    const GliderParams plant;
    const ModeledParams mod = modeled_params(plant, UncertaintyConfig{0.0});

    VehicleState s;
    s.pose << 1.0, -2.0, 12.0, 0.2, -0.3, 0.9;
    s.nu << 0.4, -0.05, 0.1, 0.02, -0.04, 0.06;
    const Vec3 U(0.15, -0.02, 0.5);

    ObserverState obs;
    obs.varpi = s.nu;

    const ObserverRates r = observer_rhs(ObserverGains::defaults(), obs, mod, s.pose, s.nu, U);
    const Vec6 expect = plant_rhs(plant, s, U, Vec6::Zero()).nu_dot;
    CHECK((r.varpi_dot - expect).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(r.Phi_dot.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("default slew-rate bound doubles the forcing slope plus an allowance") {
    const double pi = 3.14159265358979323846;
    const Vec6 b = default_dot_dM();
    CHECK(b[0] == doctest::Approx(2.0 * 0.02 * pi / 100.0 + 1e-3).epsilon(1e-14));
    CHECK(b[1] == doctest::Approx(2.0 * 0.01 * pi / 100.0 + 1e-3).epsilon(1e-14));
    CHECK(b[2] == doctest::Approx(2.0 * 0.02 * 2.0 * pi / 300.0 + 1e-3).epsilon(1e-14));
    CHECK(b[5] == doctest::Approx(2.0 * 0.01 * pi / 100.0 + 1e-3).epsilon(1e-14));

    const Vec6 wider = default_dot_dM(0.5);
    CHECK(((wider - b) - Vec6::Constant(0.5 - 1e-3)).cwiseAbs().maxCoeff() < 1e-15);
}
