#include "glider/guidance.hpp"

#include <cmath>
#include <stdexcept>

namespace glider {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Case1Reference case1_reference(double t) {
    Case1Reference r;
    r.Z_d = 0.1 * t;
    r.Zdot_d = 0.1;
    if (t < 200.0) {
        r.xi_d = -kPi / 4.0;
        r.psi_d = kPi / 6.0;
    } else if (t < 400.0) {
        r.xi_d = -kPi / 3.0;
        r.psi_d = 0.0;
    } else if (t < 600.0) {
        r.xi_d = -kPi / 4.0;
        r.psi_d = -kPi / 6.0;
    } else {
        r.xi_d = -kPi / 3.0;
        r.psi_d = kPi / 10.0;
    }
    return r;
}

double segment_azimuth(const Vec2& wp_prev, const Vec2& wp_next) {
    const Vec2 d = wp_next - wp_prev;
    if (d.norm() < 1e-12) {
        throw std::invalid_argument("degenerate path segment: coincident waypoints");
    }
    return std::atan2(d[1], d[0]);
}

double cross_track(const Vec2& position, const Vec2& wp_prev, const Vec2& wp_next) {
    const double chi = segment_azimuth(wp_prev, wp_next);
    const Vec2 r = position - wp_prev;
    return -r[0] * std::sin(chi) + r[1] * std::cos(chi);
}

IlosOutput ilos_step(IlosState& st, double y_e, double dt) {
    const double L = st.los_distance;
    const double biased = y_e + st.k_I * st.sigma_int;
    IlosOutput out;
    out.psi_d_rel = -std::atan(biased / L);
    out.sigma_dot = L * y_e / (L * L + biased * biased);
    st.sigma_int += dt * out.sigma_dot;
    return out;
}

void WaypointPlan::validate() const {
    if (waypoints.size() < 2) {
        throw std::invalid_argument("waypoint plan needs at least two points");
    }
    if (!(radius > 0.0)) {
        throw std::invalid_argument("waypoint acceptance radius must be positive");
    }
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        if ((waypoints[i] - waypoints[i - 1]).norm() < 1e-12) {
            throw std::invalid_argument("waypoint plan has coincident consecutive points");
        }
    }
}

bool waypoint_update(WaypointPlan& plan, const Vec2& position, double t) {
    if (plan.complete) return false;
    if ((position - plan.target()).norm() > plan.radius) return false;
    if (plan.index + 1 < plan.waypoints.size()) {
        ++plan.index;
    } else {
        plan.complete = true;
        plan.completion_time = t;
    }
    return true;
}

}  // namespace glider
