#pragma once

#include "glider/params.hpp"
#include "glider/types.hpp"

namespace glider {

/// Margin below pi/2 at which the kinematic map is considered singular.
inline constexpr double kPitchPoleMargin = 1e-6;

/// 3x6 map J from body velocity to the controlled-output rates
/// (Zdot, theta_dot, psi_dot).  Throws PoleError near |theta| = pi/2.
Mat36 rotation_map(const Vec6& pose);

/// Analytic time derivative of rotation_map along the trajectory implied by
/// (pose, nu), using the standard Euler-angle rate relations for phi and
/// theta.
Mat36 rotation_map_dot(const Vec6& pose, const Vec6& nu);

/// Full 6-DOF kinematics: time derivative of (X, Y, Z, phi, theta, psi).
/// Rows 3..6 (Z, theta, psi under 1-based counting) agree with
/// rotation_map(pose) * nu.
Vec6 pose_rates(const Vec6& pose, const Vec6& nu);

/// Coriolis force/moment vector C(nu)*nu, componentwise as printed.
Vec6 coriolis_vec(const GliderParams& p, const Vec6& nu);

/// Hydrodynamic damping force/moment vector D(nu)*nu.
Vec6 damping_vec(const GliderParams& p, const Vec6& nu);

/// 6x3 input-coupling matrix B(pose, gamma) with the degree-4/5 Taylor
/// polynomials standing in for sin(gamma)/gamma and (cos(gamma)-1)/gamma.
Mat63 actuation_matrix(const GliderParams& p, const Vec6& pose, double gamma);

/// Taylor factors used inside actuation_matrix: approximations of
/// sin(gamma)/gamma and (cos(gamma)-1)/gamma.
double taylor_sin_over_x(double gamma);
double taylor_cosm1_over_x(double gamma);

/// Gravity/buoyancy moment vector E(pose).
Vec6 gravity_vec(const GliderParams& p, const Vec6& pose);

/// Environmental disturbance tau_d(t): six fixed sinusoids.
Vec6 env_disturbance(double t);

/// Plant right-hand side with ACTUAL parameters:
///   pose_dot = full Euler kinematics, nu_dot = M^-1 (C nu + D nu + B U + E + tau_d).
/// U must already be saturated.
struct PlantRates {
    Vec6 pose_dot;
    Vec6 nu_dot;
};
PlantRates plant_rhs(const GliderParams& p, const VehicleState& state, const Vec3& U,
                     const Vec6& tau_d);

/// Controller-side compact form of the output dynamics
///   eta_ddot = f + g U + h d,
/// built from the MODELED parameter families:
///   f = Jdot nu + J M^-1 (C nu + D nu + E),  g = J M^-1 B,  h = J M^-1.
/// B (and therefore g) is evaluated at `gamma_b`, the previous step's
/// saturated slider angle.
struct CompactTerms {
    Vec3 f;
    Mat3 g;
    Mat36 h;
};
CompactTerms compact_terms(const ModeledParams& m, const VehicleState& state, double gamma_b);

/// Attack angle alpha = atan2(w, u), zero when |u| < u_eps.
double attack_angle(const Vec6& nu, double u_eps = 1e-3);

/// Lumped-disturbance truth:
///   d = -dM nu_dot + dC nu + dD nu + dB U + dE + tau_d,  delta = actual - modeled,
/// with nu_dot taken from the actual plant and both B evaluations at the
/// applied slider angle U[2].
Vec6 truth_disturbance(const GliderParams& actual, const ModeledParams& modeled,
                       const VehicleState& state, const Vec3& U, const Vec6& tau_d,
                       const Vec6& nu_dot);

}  // namespace glider
