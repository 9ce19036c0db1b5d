#include "glider/control.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace glider {

ExponentSchedule exponent_schedule(double varrho) {
    if (!(varrho > 0.0) || !(varrho < 1.0)) {
        throw std::domain_error("varrho must lie in (0, 1)");
    }
    ExponentSchedule s;
    s.rho1 = varrho / (2.0 - varrho);
    s.rho1p = varrho;
    s.rho2 = (4.0 - 3.0 * varrho) / (2.0 - varrho);
    s.rho2p = (4.0 - 3.0 * varrho) / (3.0 - 2.0 * varrho);
    return s;
}

void FxtGains::validate() const {
    for (int i = 0; i < 3; ++i) {
        if (!(varrho[i] > 0.0) || !(varrho[i] < 1.0)) {
            throw std::invalid_argument("fxtppc varrho must lie in (0, 1)");
        }
        if (!(mu[i] > 1.0)) {
            throw std::invalid_argument("fxtppc mu must exceed 1");
        }
        if (!(k1[i] > 0.0) || !(k2[i] > 0.0)) {
            throw std::invalid_argument("fxtppc surface gains must be strictly positive");
        }
    }
}

void SmcGains::validate() const {
    for (int i = 0; i < 3; ++i) {
        if (!(c0[i] > 0.0) || !(c1[i] > 0.0) || !(c2[i] > 0.0)) {
            throw std::invalid_argument("smc gains must be strictly positive");
        }
    }
}

void PpcGains::validate() const {
    for (int i = 0; i < 3; ++i) {
        if (!(l0[i] > 0.0) || !(l2[i] > 0.0)) {
            throw std::invalid_argument("ppc gains must be strictly positive");
        }
    }
    if (!(l1_margin > 0.0)) {
        throw std::invalid_argument("ppc l1 margin must be strictly positive");
    }
}

namespace {

// k1 (sig^rho1 + sig^1 + sig^rho1')(y)  /  k2 (sig^rho2 + sig^1 + sig^rho2')(y)
double surface_term1(double y, const ExponentSchedule& ex, double k1) {
    return k1 * (sig_pow(y, ex.rho1) + y + sig_pow(y, ex.rho1p));
}
double surface_term2(double y, const ExponentSchedule& ex, double k2) {
    return k2 * (sig_pow(y, ex.rho2) + y + sig_pow(y, ex.rho2p));
}

}  // namespace

void sliding_advance(SlidingState& st, const Vec3& eps1, const Vec3& eps2,
                     const FxtGains& gains, double dt, const std::array<bool, 3>& freeze) {
    for (int i = 0; i < 3; ++i) {
        if (freeze[i]) continue;
        const ExponentSchedule ex = gains.exponents(i);
        st.int1[i] += dt * surface_term1(eps1[i], ex, gains.k1[i]);
        st.int2[i] += dt * surface_term2(eps2[i], ex, gains.k2[i]);
    }
}

Vec3 solve_actuation(const Mat3& g, const Vec3& rhs) {
    const Eigen::JacobiSVD<Mat3> svd(g);
    const Vec3 sv = svd.singularValues();
    const double sv_max = sv[0];
    const double sv_min = sv[2];
    if (!(sv_max > 0.0)) {
        throw SingularGError();
    }
    Vec3 U;
    if (sv_min < 1e-12 || sv_max / std::max(sv_min, 1e-300) > 1e8) {
        const Mat3 normal = g.transpose() * g + 1e-6 * Mat3::Identity();
        U = normal.ldlt().solve(g.transpose() * rhs);
    } else {
        U = g.partialPivLu().solve(rhs);
    }
    if (!U.allFinite()) {
        throw SingularGError();
    }
    return U;
}

Vec3 fxtppc_control(const Vec3& eps1, const Vec3& eps2, const Vec3& lam, const Vec3& kappa,
                    const Vec3& s, const Vec3& eta_dd_d, const CompactTerms& ct,
                    const Vec6& d_hat, const FxtGains& gains) {
    Vec3 rhs;
    const Vec3 hd = ct.h * d_hat;
    for (int i = 0; i < 3; ++i) {
        const ExponentSchedule ex = gains.exponents(i);
        const double u_eps =
            -(surface_term1(eps1[i], ex, gains.k1[i]) + surface_term2(eps2[i], ex, gains.k2[i])) /
            lam[i];
        const double mu = gains.mu[i];
        const double u_s = -(gains.k1[i] + gains.k2[i]) *
                           (sig_pow(s[i], 1.0 + 1.0 / mu) + s[i] + sig_pow(s[i], 1.0 - 1.0 / mu)) /
                           lam[i];
        rhs[i] = -kappa[i] / lam[i] + eta_dd_d[i] - ct.f[i] - hd[i] + u_eps + u_s;
    }
    return solve_actuation(ct.g, rhs);
}

Vec3 smc_control(const Vec3& e, const Vec3& edot, const Vec3& eta_dd_d, const CompactTerms& ct,
                 const SmcGains& gains) {
    Vec3 rhs;
    for (int i = 0; i < 3; ++i) {
        const double p = edot[i] + gains.c0[i] * e[i];
        rhs[i] = -gains.c0[i] * edot[i] + eta_dd_d[i] - ct.f[i] - gains.c1[i] * p -
                 gains.c2[i] * std::tanh(p);
    }
    return solve_actuation(ct.g, rhs);
}

Vec3 ppc_control(const Vec3& eps, const Vec3& epsd, const Vec3& lam, const Vec3& lamd,
                 const Vec3& kappa, const Vec3& eta_dd_d, const CompactTerms& ct,
                 const Vec6& d_hat, const PpcGains& gains) {
    Vec3 rhs;
    const Vec3 hd = ct.h * d_hat;
    for (int i = 0; i < 3; ++i) {
        const double q = epsd[i] + gains.l0[i] * eps[i];
        // d/dt(1/lambda) = -lamd/lambda^2; keep l1 above it so the q-dynamics
        // damping term stays positive.
        const double l1 = std::max(-lamd[i] / (lam[i] * lam[i]), 0.0) + gains.l1_margin;
        rhs[i] = -kappa[i] / lam[i] + eta_dd_d[i] - ct.f[i] - l1 * q -
                 gains.l2[i] * std::tanh(q) - hd[i];
    }
    return solve_actuation(ct.g, rhs);
}

SaturationResult saturate(const Vec3& raw, const SaturationLimits& lim) {
    const Vec3 bound = lim.vec();
    SaturationResult out;
    for (int i = 0; i < 3; ++i) {
        out.active[i] = std::abs(raw[i]) > bound[i];
        out.U[i] = std::min(std::max(raw[i], -bound[i]), bound[i]);
    }
    return out;
}

SettlingBound settling_bound(const FxtGains& gains, double T_obs) {
    SettlingBound out;
    for (int i = 0; i < 3; ++i) {
        out.per_channel[i] = 2.0 * gains.mu[i] / std::min(gains.k1[i], gains.k2[i]);
    }
    out.total = T_obs + out.per_channel.sum();
    return out;
}

}  // namespace glider
