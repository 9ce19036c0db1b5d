#pragma once

#include "glider/params.hpp"
#include "glider/types.hpp"

namespace glider {

/// Gains of the sliding-mode disturbance observer (one entry per body axis).
struct ObserverGains {
    Vec6 iota1;
    Vec6 iota2;
    Vec6 varsigma;

    /// The gain set printed with the scenarios.
    static ObserverGains defaults();

    void validate() const;
};

/// Observer state: estimated body velocity varpi and the running integral
/// Phi = integral of varphi, so that d_hat = -Phi.  d_hat(0) = 0 exactly.
struct ObserverState {
    Vec6 varpi = Vec6::Zero();
    Vec6 Phi = Vec6::Zero();

    Vec6 d_hat() const { return -Phi; }
};

/// Continuous-time observer right-hand side, evaluated with MODELED matrices:
///   Pi        = M (nu - varpi)
///   rho       = -iota1 (sig^1/2(Pi) + varsigma sig^3/2(Pi))
///   varphi    = -iota2 (2 varsigma Pi + 3/2 varsigma^2 sig^2(Pi) + 1/2 sig^0(Pi))
///   varpi_dot = M^-1 (C nu + D nu + E - rho + B U - Phi)
///   Phi_dot   = varphi
/// The scenario integrates this coupled with the plant (same step and scheme).
struct ObserverRates {
    Vec6 varpi_dot;
    Vec6 Phi_dot;
};
ObserverRates observer_rhs(const ObserverGains& gains, const ObserverState& obs,
                           const ModeledParams& m, const Vec6& pose, const Vec6& nu,
                           const Vec3& U);

/// Membership test for the printed admissible-gain set for one axis:
///   (0 < iota1 <= 2 sqrt(dot_dM)  and  iota2 > iota1^2/4 + 4 dot_dM^2 / iota1^2)
///   or (iota1 > 2 sqrt(dot_dM)  and  iota2 > dot_dM).
bool gain_set_valid(double iota1, double iota2, double dot_dM);

/// Per-axis default bound on the lumped-disturbance slew rate used only by the
/// gain diagnostics: twice the analytic peak slope of the printed disturbance
/// sinusoids plus a model-uncertainty allowance.
Vec6 default_dot_dM(double model_allowance = 1e-3);

/// Diagnostic: estimation error d_tilde = d - d_hat.
inline Vec6 estimate_error_signal(const Vec6& d_truth, const Vec6& d_hat) {
    return d_truth - d_hat;
}

}  // namespace glider
