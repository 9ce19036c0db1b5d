#pragma once

#include "glider/types.hpp"

namespace glider {

/// Physical and hydrodynamic constants of the vehicle.  One instance holds the
/// "actual" (plant-side) values; scaled copies provide the "modeled"
/// (controller-side) values used by the control and observer paths.
struct GliderParams {
    // Body mass and inertia, added terms included.
    double m1 = 66.76, m2 = 114.86, m3 = 131.20;
    double I1 = 1.13, I2 = 23.15, I3 = 25.50;
    // Internal actuation geometry.
    double m_p = 11.0;    // moving (pitch/roll trim) mass, kg
    double m_h = 54.28;   // hull mass, kg
    double R_p = 0.014;   // radial offset of the moving mass, m
    double r_b = 0.0;     // axial position of the ballast mass, m
    // Hydrodynamic coefficients.
    double K_D = 386.29, K_D0 = 7.19;
    double K_L = 440.99, K_L0 = -0.36;
    double K_beta = -115.65;
    double K_MR = -58.27, K_p = -19.83;
    double K_M = -65.84, K_M0 = 0.28, K_q = -205.64;
    double K_MY = 34.10, K_r = -389.30;
    // Gravity coefficient.
    double g = 9.81;

    Vec6 mass_diag() const {
        Vec6 m;
        m << m1, m2, m3, I1, I2, I3;
        return m;
    }

    /// Copy with every inertial (m1..m3, I1..I3) and hydrodynamic (K_*)
    /// coefficient multiplied by `factor`.  Geometry and gravity constants
    /// (m_p, m_h, R_p, r_b, g) are left untouched: they are shared knowledge
    /// between plant and controller.
    GliderParams coefficients_scaled(double factor) const;

    void validate() const;
};

/// Uncertainty between the plant and the controller's model, applied as a
/// multiplicative (1 - fraction) on the modeled coefficient set, with a switch
/// per matrix family selecting which modeled evaluations use the scaled
/// coefficients.  The B and E families read only unscaled geometry/gravity
/// constants, so their switches are accepted but change nothing.
struct UncertaintyConfig {
    double fraction = 0.2;
    bool scale_M = true;
    bool scale_C = true;
    bool scale_D = true;
    bool scale_B = true;
    bool scale_E = true;

    void validate() const;
};

/// Controller-side parameter sets, one per matrix family.  Each family
/// evaluator reads only its own coefficients, so a family's entry is either
/// the scaled copy or the actual set depending on its switch.
struct ModeledParams {
    GliderParams for_M;
    GliderParams for_C;
    GliderParams for_D;
    GliderParams for_B;
    GliderParams for_E;
};

/// Build the modeled parameter set from the actual one.
ModeledParams modeled_params(const GliderParams& actual, const UncertaintyConfig& unc);

}  // namespace glider
