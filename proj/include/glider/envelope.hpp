#pragma once

#include "glider/types.hpp"

namespace glider {

/// Shape of the performance (error-bound) function.
enum class FtpfKind {
    Sech,        // proposed: sech(sech(P0) * T / (T - t)) + P_inf
    Classical,   // (P0 - t/T) exp(1 - T/(T - t)) + P_inf
    PpcBaseline  // exp(z)/(1 + exp(z)^2) + P_inf with z = P0 * T / (T - t)
};

/// One channel's prescribed-performance settings.  The envelope clock t* is
/// maintained by the scenario (mod-period or time-since-reset); operations
/// here take t* directly.
struct PerformanceSpec {
    double P0 = 1.0;
    double P_inf = 0.2;
    double T = 100.0;
    double delta_L = 1.0;
    double delta_R = 1.0;

    void validate() const;
};

/// Envelope value with analytic derivatives.
struct EnvelopeValue {
    double P;
    double Pd;
    double Pdd;
};

/// Guard: within this distance of T the floor branch is used (avoids overflow
/// in T/(T - t*)).
inline constexpr double kFtpfBranchGuard = 1e-6;

/// Evaluate one FTPF form at envelope clock t* >= 0.  For t* >= T (or within
/// the branch guard) returns (P_inf, 0, 0).
EnvelopeValue ftpf_eval(FtpfKind kind, double t_star, const PerformanceSpec& spec);

/// Convenience wrappers matching the three printed forms.
inline EnvelopeValue ftpf_sech(double t_star, const PerformanceSpec& spec) {
    return ftpf_eval(FtpfKind::Sech, t_star, spec);
}
inline EnvelopeValue ftpf_exp_classical(double t_star, const PerformanceSpec& spec) {
    return ftpf_eval(FtpfKind::Classical, t_star, spec);
}
inline EnvelopeValue ftpf_ppc_baseline(double t_star, const PerformanceSpec& spec) {
    return ftpf_eval(FtpfKind::PpcBaseline, t_star, spec);
}

/// Margin by which e/P is clamped inside the open band on a violation.
inline constexpr double kBandClampMargin = 1e-6;

/// Transformed error and its chain-rule companions for one channel:
///   eps  = 1/2 ln((delta_L + e/P) / (delta_R - e/P))
///   lam  = (1/2P) (1/(delta_L + e/P) + 1/(delta_R - e/P))
///   epsd = lam (edot P - e Pd) / P
/// plus lam's time derivative and the kappa term of the control law.
/// `violated` reports that e/P was outside the open band and was clamped.
struct TransformedError {
    double eps;
    double epsd;
    double lam;
    double lamd;
    double kappa;
    bool violated;
};

/// Transform a raw error through the envelope.  Never throws: out-of-band
/// errors are clamped to +-(delta - kBandClampMargin) and flagged.
TransformedError transform_error(double e, double edot, const EnvelopeValue& env,
                                 double delta_L, double delta_R);

}  // namespace glider
