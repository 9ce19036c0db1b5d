#pragma once

#include "glider/dynamics.hpp"
#include "glider/types.hpp"

#include <array>

namespace glider {

/// Fixed-time exponent schedule derived from a single varrho in (0,1).
struct ExponentSchedule {
    double rho1;    // varrho / (2 - varrho)
    double rho1p;   // varrho
    double rho2;    // (4 - 3 varrho) / (2 - varrho)
    double rho2p;   // (4 - 3 varrho) / (3 - 2 varrho)
};
ExponentSchedule exponent_schedule(double varrho);  // throws std::domain_error

/// Gains of the fixed-time prescribed-performance controller.
struct FxtGains {
    Vec3 varrho{0.8, 0.8, 0.8};
    Vec3 mu{2.0, 2.0, 2.0};
    Vec3 k1{0.001, 0.01, 0.001};
    Vec3 k2{0.01, 0.2, 0.08};

    ExponentSchedule exponents(int channel) const { return exponent_schedule(varrho[channel]); }
    void validate() const;
};

/// Baseline gains.
struct SmcGains {
    Vec3 c0{0.1, 0.1, 0.1};
    Vec3 c1{1.0, 1.0, 1.0};
    Vec3 c2{5.0, 5.0, 5.0};
    void validate() const;
};
struct PpcGains {
    Vec3 l0{0.1, 0.1, 0.1};
    Vec3 l2{1.0, 1.0, 3.0};
    double l1_margin = 0.1;  // l1 = max(d/dt(1/lambda), 0) + margin
    void validate() const;
};

/// Accumulators of the integral sliding surface
///   s = eps2 + k1 Int[sig^rho1 + sig^1 + sig^rho1'](eps1)
///          + k2 Int[sig^rho2 + sig^1 + sig^rho2'](eps2).
struct SlidingState {
    Vec3 int1 = Vec3::Zero();
    Vec3 int2 = Vec3::Zero();

    Vec3 surface(const Vec3& eps2) const { return eps2 + int1 + int2; }
};

/// Advance the two integrals one rectangle-rule step.  Channels flagged in
/// `freeze` (actuator saturated or band clamped) are held to prevent windup.
void sliding_advance(SlidingState& st, const Vec3& eps1, const Vec3& eps2,
                     const FxtGains& gains, double dt, const std::array<bool, 3>& freeze);

/// Shared solve of g U = rhs.  When cond(g) > 1e8 the normal equations are
/// Tikhonov-damped with lambda = 1e-6; a fully degenerate g throws.
Vec3 solve_actuation(const Mat3& g, const Vec3& rhs);

/// The FxTPPC law:
///   U = g^-1 (-Lam^-1 K + eta_dd_d - f - h d_hat + u_eps + u_s)
/// with the printed u_eps (transformed-error feedback) and u_s (sliding
/// feedback, exponents 1 +- 1/mu).  Returns the raw (unsaturated) command.
Vec3 fxtppc_control(const Vec3& eps1, const Vec3& eps2, const Vec3& lam, const Vec3& kappa,
                    const Vec3& s, const Vec3& eta_dd_d, const CompactTerms& ct,
                    const Vec6& d_hat, const FxtGains& gains);

/// Baseline sliding-mode law on the raw errors (no envelope, no observer):
///   p = edot + c0 e,  U = g^-1 (-c0 edot + eta_dd_d - f - c1 p - c2 tanh(p)).
Vec3 smc_control(const Vec3& e, const Vec3& edot, const Vec3& eta_dd_d,
                 const CompactTerms& ct, const SmcGains& gains);

/// Baseline prescribed-performance law on the transformed errors:
///   q = epsd + l0 eps,
///   U = g^-1 (-Lam^-1 K + eta_dd_d - f - l1 q - l2 tanh(q) - h d_hat),
/// where l1 is chosen online so that d/dt(1/lambda_i) - l1_i < 0.
Vec3 ppc_control(const Vec3& eps, const Vec3& epsd, const Vec3& lam, const Vec3& lamd,
                 const Vec3& kappa, const Vec3& eta_dd_d, const CompactTerms& ct,
                 const Vec6& d_hat, const PpcGains& gains);

/// Componentwise clamp to the actuator limits; per-channel saturation flags.
struct SaturationResult {
    Vec3 U;
    std::array<bool, 3> active;
};
SaturationResult saturate(const Vec3& raw, const SaturationLimits& lim);

/// Reported settling-time diagnostics:
///   per channel T_i <= 2 mu_i / min(k1_i, k2_i),  total <= T_obs + sum T_i.
struct SettlingBound {
    Vec3 per_channel;
    double total;
};
SettlingBound settling_bound(const FxtGains& gains, double T_obs);

}  // namespace glider
