#include "glider/observer.hpp"

#include "glider/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace glider {

ObserverGains ObserverGains::defaults() {
    ObserverGains g;
    g.iota1 << 0.001, 0.001, 0.01, 0.01, 0.01, 0.01;
    g.iota2 << 0.01, 0.01, 0.1, 0.1, 0.1, 0.1;
    g.varsigma << 18.0, 18.0, 18.0, 180.0, 180.0, 180.0;
    return g;
}

void ObserverGains::validate() const {
    for (int i = 0; i < 6; ++i) {
        if (!(iota1[i] > 0.0) || !(iota2[i] > 0.0) || !(varsigma[i] > 0.0)) {
            throw std::invalid_argument("observer gains must be strictly positive");
        }
    }
}

ObserverRates observer_rhs(const ObserverGains& gains, const ObserverState& obs,
                           const ModeledParams& m, const Vec6& pose, const Vec6& nu,
                           const Vec3& U) {
    const Vec6 M = m.for_M.mass_diag();
    const Vec6 Pi = M.cwiseProduct(nu - obs.varpi);

    Vec6 rho, varphi;
    for (int i = 0; i < 6; ++i) {
        const double pi_i = Pi[i];
        const double vs = gains.varsigma[i];
        rho[i] = -gains.iota1[i] * (sig_pow(pi_i, 0.5) + vs * sig_pow(pi_i, 1.5));
        varphi[i] = -gains.iota2[i] *
                    (2.0 * vs * pi_i + 1.5 * vs * vs * sig_pow(pi_i, 2.0) + 0.5 * sign(pi_i));
    }

    VehicleState st;
    st.pose = pose;
    st.nu = nu;
    const Vec6 force = coriolis_vec(m.for_C, nu) + damping_vec(m.for_D, nu) +
                       gravity_vec(m.for_E, pose) - rho +
                       actuation_matrix(m.for_B, pose, U[2]) * U - obs.Phi;

    ObserverRates out;
    out.varpi_dot = force.cwiseQuotient(M);
    out.Phi_dot = varphi;
    return out;
}

bool gain_set_valid(double iota1, double iota2, double dot_dM) {
    if (!(iota1 > 0.0) || !(iota2 > 0.0) || !(dot_dM > 0.0)) return false;
    const double two_sqrt = 2.0 * std::sqrt(dot_dM);
    if (iota1 <= two_sqrt) {
        return iota2 > iota1 * iota1 / 4.0 + 4.0 * dot_dM * dot_dM / (iota1 * iota1);
    }
    return iota2 > dot_dM;
}

Vec6 default_dot_dM(double model_allowance) {
    constexpr double pi = 3.14159265358979323846;
    // Peak slope of a sin(w t) is a*w; the printed components use
    // amplitudes (0.02, 0.01, 0.02, 0.01, 0.02, 0.01) and frequencies
    // (pi/100 except row 3's 2 pi/300).
    Vec6 slope;
    slope << 0.02 * pi / 100.0, 0.01 * pi / 100.0, 0.02 * 2.0 * pi / 300.0, 0.01 * pi / 100.0,
        0.02 * pi / 100.0, 0.01 * pi / 100.0;
    return 2.0 * slope + Vec6::Constant(model_allowance);
}

}  // namespace glider
