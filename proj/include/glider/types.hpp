#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace glider {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat36 = Eigen::Matrix<double, 3, 6>;
using Mat63 = Eigen::Matrix<double, 6, 3>;

/// Full rigid-body state: pose = (X, Y, Z, phi, theta, psi) in the flat-earth
/// frame, nu = (u, v, w, p, q, r) in the body frame.  The controlled output is
/// eta = (Z, theta, psi); the full pose is carried because the kinematic map
/// depends on roll.
struct VehicleState {
    Vec6 pose = Vec6::Zero();
    Vec6 nu = Vec6::Zero();

    double Z() const { return pose[2]; }
    double phi() const { return pose[3]; }
    double theta() const { return pose[4]; }
    double psi() const { return pose[5]; }
};

/// Actuator triple: ballast mass m_b (kg), axial slider position r_p1 (m),
/// slider rotation gamma (rad).
struct ControlInput {
    double m_b = 0.0;
    double r_p1 = 0.0;
    double gamma = 0.0;

    Vec3 vec() const { return {m_b, r_p1, gamma}; }
    static ControlInput from_vec(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

/// Hard actuator limits (symmetric), configurable.
struct SaturationLimits {
    double m_b = 0.4;
    double r_p1 = 0.06;
    double gamma = 1.5707963267948966;  // pi/2

    Vec3 vec() const { return {m_b, r_p1, gamma}; }
};

/// Discrete event kinds recorded in the simulation log.
enum class EventKind : std::uint8_t {
    BandViolation,     // raw error left its prescribed band (clamped, channel in `channel`)
    Saturation,        // actuator channel clamped (channel in `channel`)
    ReferenceSwitch,   // attitude-schedule block boundary (case 1)
    WaypointSwitch,    // waypoint advanced (index in `channel`)
    PathComplete,      // final waypoint reached
    Abort,             // run stopped early (pole / non-finite state); log is partial
};

struct Event {
    EventKind kind;
    int channel;  // error/actuator channel or waypoint index; -1 when unused
};

/// Thrown when |theta| is too close to +-pi/2 for the kinematic map.
class PoleError : public std::runtime_error {
  public:
    explicit PoleError(double theta)
        : std::runtime_error("pitch angle " + std::to_string(theta) +
                             " rad is within 1e-6 of +-pi/2; kinematic map is singular") {}
};

/// Thrown when the input-coupling matrix g cannot be inverted even with damping.
class SingularGError : public std::runtime_error {
  public:
    SingularGError() : std::runtime_error("input-coupling matrix g is singular") {}
};

/// Thrown when the integrator produces a non-finite state.
class NonFiniteStateError : public std::runtime_error {
  public:
    explicit NonFiniteStateError(double t)
        : std::runtime_error("non-finite state at t = " + std::to_string(t) + " s") {}
};

/// Signed power: sig^a(y) = |y|^a * sign(y), with sig^0(y) = sign(y) and
/// sign(0) = 0.
inline double sig_pow(double y, double a) {
    if (y > 0.0) return std::pow(y, a);
    if (y < 0.0) return -std::pow(-y, a);
    return 0.0;
}

inline double sign(double y) { return y > 0.0 ? 1.0 : (y < 0.0 ? -1.0 : 0.0); }

/// Overflow-safe sech.
inline double sech(double z) {
    const double a = std::abs(z);
    const double e = std::exp(-a);
    return 2.0 * e / (1.0 + e * e);
}

/// Wrap an angle to (-pi, pi].
inline double wrap_pi(double a) {
    constexpr double pi = 3.14159265358979323846;
    constexpr double two_pi = 2.0 * pi;
    double r = std::fmod(a + pi, two_pi);
    if (r <= 0.0) r += two_pi;
    return r - pi;
}

}  // namespace glider
