#include "glider/dynamics.hpp"

#include <cmath>

namespace glider {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void check_pitch(double theta) {
    if (std::abs(theta) >= kHalfPi - kPitchPoleMargin) throw PoleError(theta);
}

}  // namespace

Mat36 rotation_map(const Vec6& pose) {
    const double phi = pose[3], theta = pose[4];
    check_pitch(theta);
    const double sph = std::sin(phi), cph = std::cos(phi);
    const double sth = std::sin(theta), cth = std::cos(theta);
    const double sc = 1.0 / cth;
    Mat36 J = Mat36::Zero();
    J(0, 0) = -sth;
    J(0, 1) = sph * cth;
    J(0, 2) = cph * cth;
    J(1, 4) = cph;
    J(1, 5) = -sph;
    J(2, 4) = sph * sc;
    J(2, 5) = cph * sc;
    return J;
}

Mat36 rotation_map_dot(const Vec6& pose, const Vec6& nu) {
    const double phi = pose[3], theta = pose[4];
    check_pitch(theta);
    const double p = nu[3], q = nu[4], r = nu[5];
    const double sph = std::sin(phi), cph = std::cos(phi);
    const double sth = std::sin(theta), cth = std::cos(theta);
    const double tth = sth / cth, sc = 1.0 / cth;
    const double phid = p + (q * sph + r * cph) * tth;
    const double thd = q * cph - r * sph;
    Mat36 Jd = Mat36::Zero();
    Jd(0, 0) = -cth * thd;
    Jd(0, 1) = cph * cth * phid - sph * sth * thd;
    Jd(0, 2) = -sph * cth * phid - cph * sth * thd;
    Jd(1, 4) = -sph * phid;
    Jd(1, 5) = -cph * phid;
    Jd(2, 4) = cph * sc * phid + sph * sc * tth * thd;
    Jd(2, 5) = -sph * sc * phid + cph * sc * tth * thd;
    return Jd;
}

Vec6 pose_rates(const Vec6& pose, const Vec6& nu) {
    const double phi = pose[3], theta = pose[4], psi = pose[5];
    check_pitch(theta);
    const double u = nu[0], v = nu[1], w = nu[2];
    const double p = nu[3], q = nu[4], r = nu[5];
    const double sph = std::sin(phi), cph = std::cos(phi);
    const double sth = std::sin(theta), cth = std::cos(theta);
    const double sps = std::sin(psi), cps = std::cos(psi);
    const double tth = sth / cth;
    Vec6 out;
    out[0] = cps * cth * u + (cps * sth * sph - sps * cph) * v + (cps * sth * cph + sps * sph) * w;
    out[1] = sps * cth * u + (sps * sth * sph + cps * cph) * v + (sps * sth * cph - cps * sph) * w;
    out[2] = -sth * u + sph * cth * v + cph * cth * w;
    out[3] = p + (q * sph + r * cph) * tth;
    out[4] = q * cph - r * sph;
    out[5] = (q * sph + r * cph) / cth;
    return out;
}

Vec6 coriolis_vec(const GliderParams& p, const Vec6& nu) {
    const double u = nu[0], v = nu[1], w = nu[2];
    const double pp = nu[3], q = nu[4], r = nu[5];
    Vec6 out;
    out[0] = p.m2 * v * r - p.m3 * w * q;
    out[1] = -p.m1 * u * r + p.m3 * w * pp;
    out[2] = p.m1 * u * q - p.m2 * v * pp;
    out[3] = p.m2 * v * w - p.m3 * w * v + p.I2 * q * r - p.I3 * r * q;
    out[4] = -p.m1 * u * w + p.m3 * w * u - p.I1 * pp * r + p.I3 * r * pp;
    out[5] = p.m1 * u * v - p.m2 * v * u + p.I1 * pp * q - p.I2 * q * pp;
    return out;
}

Vec6 damping_vec(const GliderParams& p, const Vec6& nu) {
    const double u = nu[0], v = nu[1], w = nu[2];
    const double pp = nu[3], q = nu[4], r = nu[5];
    Vec6 out;
    out[0] = p.K_L0 * u * w - p.K_D0 * u * u;
    out[1] = p.K_beta * u * v - p.K_D0 * u * v;
    out[2] = -p.K_L0 * u * u - p.K_D0 * u * w - p.K_L * w * u;
    out[3] = p.K_p * pp * u * u + p.K_MR * u * v - p.K_M0 * u * v;
    out[4] = p.K_M0 * u * u + p.K_q * q * u * u + p.K_M * u * w;
    out[5] = p.K_r * r * u * u + p.K_MY * u * v;
    return out;
}

double taylor_sin_over_x(double gamma) {
    const double g2 = gamma * gamma;
    return 1.0 - g2 / 6.0 + g2 * g2 / 120.0;
}

double taylor_cosm1_over_x(double gamma) {
    return -gamma / 2.0 + gamma * gamma * gamma / 24.0;
}

Mat63 actuation_matrix(const GliderParams& p, const Vec6& pose, double gamma) {
    const double phi = pose[3], theta = pose[4];
    const double sph = std::sin(phi), cph = std::cos(phi);
    const double sth = std::sin(theta), cth = std::cos(theta);
    const double ps = taylor_sin_over_x(gamma);
    const double pc = taylor_cosm1_over_x(gamma);
    const double g = p.g;
    Mat63 B = Mat63::Zero();
    B(0, 0) = -g * sth;
    B(1, 0) = g * cth * sph;
    B(2, 0) = g * cth * cph;
    B(3, 2) = -p.m_p * p.R_p * g * cth * (cph * ps - sph * pc);
    B(4, 0) = -g * cph * cth * p.r_b;
    B(4, 1) = -p.m_p * g * cph * cth;
    B(4, 2) = -p.m_p * g * p.R_p * sth * pc;
    B(5, 0) = g * cth * sph * p.r_b;
    B(5, 1) = p.m_p * g * cth * sph;
    B(5, 2) = p.m_p * g * p.R_p * sth * ps;
    return B;
}

Vec6 gravity_vec(const GliderParams& p, const Vec6& pose) {
    const double phi = pose[3], theta = pose[4];
    Vec6 E = Vec6::Zero();
    E[3] = -p.g * std::cos(phi) * p.R_p * p.m_p;
    E[4] = -p.g * std::sin(theta) * p.R_p * p.m_p;
    return E;
}

Vec6 env_disturbance(double t) {
    constexpr double pi = 3.14159265358979323846;
    Vec6 d;
    d[0] = 0.02 * std::sin(pi * t / 100.0);
    d[1] = 0.01 * std::sin(pi * t / 100.0);
    d[2] = -0.02 * std::sin(2.0 * pi * t / 300.0);
    d[3] = 0.01 * std::sin(pi * t / 100.0);
    d[4] = 0.02 * std::sin(pi * t / 100.0);
    d[5] = -0.01 * std::sin(pi * t / 100.0);
    return d;
}

PlantRates plant_rhs(const GliderParams& p, const VehicleState& state, const Vec3& U,
                     const Vec6& tau_d) {
    const Vec6 force = coriolis_vec(p, state.nu) + damping_vec(p, state.nu) +
                       actuation_matrix(p, state.pose, U[2]) * U + gravity_vec(p, state.pose) +
                       tau_d;
    PlantRates out;
    out.pose_dot = pose_rates(state.pose, state.nu);
    out.nu_dot = force.cwiseQuotient(p.mass_diag());
    return out;
}

CompactTerms compact_terms(const ModeledParams& m, const VehicleState& state, double gamma_b) {
    const Mat36 J = rotation_map(state.pose);
    const Mat36 Jd = rotation_map_dot(state.pose, state.nu);
    const Vec6 Minv = m.for_M.mass_diag().cwiseInverse();
    const Vec6 core = (coriolis_vec(m.for_C, state.nu) + damping_vec(m.for_D, state.nu) +
                       gravity_vec(m.for_E, state.pose))
                          .cwiseProduct(Minv);
    CompactTerms ct;
    ct.h = J * Minv.asDiagonal();
    ct.f = Jd * state.nu + J * core;
    ct.g = ct.h * actuation_matrix(m.for_B, state.pose, gamma_b);
    return ct;
}

double attack_angle(const Vec6& nu, double u_eps) {
    if (std::abs(nu[0]) < u_eps) return 0.0;
    return std::atan2(nu[2], nu[0]);
}

Vec6 truth_disturbance(const GliderParams& actual, const ModeledParams& modeled,
                       const VehicleState& state, const Vec3& U, const Vec6& tau_d,
                       const Vec6& nu_dot) {
    const Vec6 dM = actual.mass_diag() - modeled.for_M.mass_diag();
    const Vec6 dC = coriolis_vec(actual, state.nu) - coriolis_vec(modeled.for_C, state.nu);
    const Vec6 dD = damping_vec(actual, state.nu) - damping_vec(modeled.for_D, state.nu);
    const Mat63 dB = actuation_matrix(actual, state.pose, U[2]) -
                     actuation_matrix(modeled.for_B, state.pose, U[2]);
    const Vec6 dE = gravity_vec(actual, state.pose) - gravity_vec(modeled.for_E, state.pose);
    return -dM.cwiseProduct(nu_dot) + dC + dD + dB * U + dE + tau_d;
}

}  // namespace glider
