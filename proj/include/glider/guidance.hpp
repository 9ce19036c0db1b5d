#pragma once

#include "glider/types.hpp"

#include <optional>
#include <vector>

namespace glider {

/// Attitude-schedule references for the switching scenario.
struct Case1Reference {
    double Z_d;     // depth ramp 0.1 t
    double Zdot_d;  // 0.1
    double xi_d;    // commanded glide angle
    double psi_d;   // commanded heading
};

/// Piecewise schedule over 200 s blocks; beyond 800 s the last block holds.
Case1Reference case1_reference(double t);

/// theta_d = xi_d + alpha.
inline double pitch_reference(double xi_d, double alpha) { return xi_d + alpha; }

/// Signed cross-track distance of (X, Y) from the segment line wp_prev ->
/// wp_next, positive to port of the path direction:
///   y_e = -(X - X_prev) sin(chi) + (Y - Y_prev) cos(chi),
/// chi = atan2(Y_next - Y_prev, X_next - X_prev).
/// Throws std::invalid_argument for a degenerate (zero-length) segment.
double cross_track(const Vec2& position, const Vec2& wp_prev, const Vec2& wp_next);

/// Path azimuth of a segment.
double segment_azimuth(const Vec2& wp_prev, const Vec2& wp_next);

/// Integral line-of-sight guidance state.
struct IlosState {
    double sigma_int = 0.0;
    double los_distance = 2.5;  // Lambda
    double k_I = 0.01;
};

/// One guidance update: returns the path-frame heading command
///   psi_d = -atan((y_e + k_I sigma) / Lambda)
/// computed with the current sigma, then advances sigma one explicit step of
///   sigma_dot = Lambda y_e / (Lambda^2 + (y_e + k_I sigma)^2).
struct IlosOutput {
    double psi_d_rel;   // relative to the path azimuth
    double sigma_dot;
};
IlosOutput ilos_step(IlosState& st, double y_e, double dt);

/// Ordered waypoint list with inclusive switching radius.
struct WaypointPlan {
    std::vector<Vec2> waypoints;
    double radius = 5.0;
    std::size_t index = 0;               // current target
    bool complete = false;
    std::optional<double> completion_time;

    const Vec2& target() const { return waypoints.at(index); }
    void validate() const;
};

/// Advance the plan when the vehicle is within `radius` of the current target
/// (inclusive).  Returns true when a switch fired; on reaching the last
/// waypoint the plan is marked complete at time t.
bool waypoint_update(WaypointPlan& plan, const Vec2& position, double t);

}  // namespace glider
