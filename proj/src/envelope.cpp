#include "glider/envelope.hpp"

#include <cmath>
#include <stdexcept>

namespace glider {

void PerformanceSpec::validate() const {
    if (!(P0 > 0.0)) throw std::invalid_argument("performance spec: P0 must be positive");
    if (!(P_inf > 0.0)) throw std::invalid_argument("performance spec: P_inf must be positive");
    if (!(sech(P0) > P_inf)) {
        throw std::invalid_argument("performance spec: sech(P0) must exceed P_inf");
    }
    if (!(T > 0.0)) throw std::invalid_argument("performance spec: T must be positive");
    if (!(delta_L > 0.0 && delta_L <= 1.0) || !(delta_R > 0.0 && delta_R <= 1.0)) {
        throw std::invalid_argument("performance spec: overshoot bounds must lie in (0, 1]");
    }
}

EnvelopeValue ftpf_eval(FtpfKind kind, double t_star, const PerformanceSpec& spec) {
    if (t_star >= spec.T - kFtpfBranchGuard) return {spec.P_inf, 0.0, 0.0};

    const double T = spec.T;
    const double rem = T - t_star;
    switch (kind) {
        case FtpfKind::Sech: {
            // P = sech(z) + P_inf, z = sech(P0) T / (T - t*)
            const double c = sech(spec.P0);
            const double z = c * T / rem;
            const double zd = c * T / (rem * rem);
            const double zdd = 2.0 * c * T / (rem * rem * rem);
            const double s = sech(z), th = std::tanh(z);
            return {s + spec.P_inf, -s * th * zd, -s * (1.0 - 2.0 * th * th) * zd * zd - s * th * zdd};
        }
        case FtpfKind::Classical: {
            // P = (P0 - t*/T) exp(1 - T/(T - t*)) + P_inf
            const double a = spec.P0 - t_star / T;
            const double w = std::exp(1.0 - T / rem);
            const double wd = w * (-T / (rem * rem));  // d/dt* of the exponent is -T/rem^2
            const double wdd = wd * (-T / (rem * rem)) + w * (-2.0 * T / (rem * rem * rem));
            const double Pd = -w / T + a * wd;
            const double Pdd = -wd / T + (-1.0 / T) * wd + a * wdd;
            return {a * w + spec.P_inf, Pd, Pdd};
        }
        case FtpfKind::PpcBaseline: {
            // P = exp(z)/(1 + exp(z)^2) + P_inf = sech(z)/2 + P_inf, z = P0 T/(T - t*)
            const double z = spec.P0 * T / rem;
            const double zd = spec.P0 * T / (rem * rem);
            const double zdd = 2.0 * spec.P0 * T / (rem * rem * rem);
            const double s = sech(z), th = std::tanh(z);
            return {0.5 * s + spec.P_inf, -0.5 * s * th * zd,
                    -0.5 * (s * (1.0 - 2.0 * th * th) * zd * zd + s * th * zdd)};
        }
    }
    throw std::logic_error("unreachable FTPF kind");
}

TransformedError transform_error(double e, double edot, const EnvelopeValue& env, double delta_L,
                                 double delta_R) {
    const double P = env.P, Pd = env.Pd, Pdd = env.Pdd;
    double x = e / P;
    bool violated = false;
    if (x >= delta_R - kBandClampMargin) {
        x = delta_R - kBandClampMargin;
        violated = true;
    } else if (x <= -delta_L + kBandClampMargin) {
        x = -delta_L + kBandClampMargin;
        violated = true;
    }
    const double A = 1.0 / (delta_L + x);
    const double B = 1.0 / (delta_R - x);

    TransformedError out;
    out.violated = violated;
    out.eps = 0.5 * std::log((delta_L + x) / (delta_R - x));
    out.lam = (A + B) / (2.0 * P);
    // Numerator of d/dt (e/P), times P^2:
    const double num = edot * P - e * Pd;
    const double xd = num / (P * P);
    out.epsd = out.lam * num / P;
    out.lamd = (B * B - A * A) * xd / (2.0 * P) - out.lam * Pd / P;
    out.kappa = out.lamd * num / P +
                out.lam * (-edot * Pd * P - e * Pdd * P + e * Pd * Pd) / (P * P);
    return out;
}

}  // namespace glider
