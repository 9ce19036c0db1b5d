#include "glider/params.hpp"

#include <stdexcept>

namespace glider {

GliderParams GliderParams::coefficients_scaled(double factor) const {
    GliderParams q = *this;
    q.m1 *= factor;
    q.m2 *= factor;
    q.m3 *= factor;
    q.I1 *= factor;
    q.I2 *= factor;
    q.I3 *= factor;
    q.K_D *= factor;
    q.K_D0 *= factor;
    q.K_L *= factor;
    q.K_L0 *= factor;
    q.K_beta *= factor;
    q.K_MR *= factor;
    q.K_p *= factor;
    q.K_M *= factor;
    q.K_M0 *= factor;
    q.K_q *= factor;
    q.K_MY *= factor;
    q.K_r *= factor;
    return q;
}

void GliderParams::validate() const {
    const double positives[] = {m1, m2, m3, I1, I2, I3, m_p, m_h, R_p};
    for (double v : positives) {
        if (!(v > 0.0)) throw std::invalid_argument("mass/inertia/geometry parameters must be positive");
    }
    const double all[] = {m1, m2, m3, I1,   I2,  I3,   m_p, m_h, R_p, r_b, K_D, K_D0,
                          K_L, K_L0, K_beta, K_MR, K_p, K_M, K_M0, K_q, K_MY, K_r, g};
    for (double v : all) {
        if (!std::isfinite(v)) throw std::invalid_argument("glider parameters must be finite");
    }
}

void UncertaintyConfig::validate() const {
    if (!(fraction >= 0.0 && fraction < 1.0)) {
        throw std::invalid_argument("uncertainty fraction must lie in [0, 1)");
    }
}

ModeledParams modeled_params(const GliderParams& actual, const UncertaintyConfig& unc) {
    unc.validate();
    const GliderParams scaled = actual.coefficients_scaled(1.0 - unc.fraction);
    ModeledParams m;
    m.for_M = unc.scale_M ? scaled : actual;
    m.for_C = unc.scale_C ? scaled : actual;
    m.for_D = unc.scale_D ? scaled : actual;
    m.for_B = unc.scale_B ? scaled : actual;
    m.for_E = unc.scale_E ? scaled : actual;
    return m;
}

}  // namespace glider
