#pragma once

#include "glider/control.hpp"
#include "glider/dynamics.hpp"
#include "glider/envelope.hpp"
#include "glider/guidance.hpp"
#include "glider/observer.hpp"
#include "glider/params.hpp"
#include "glider/types.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace glider {

enum class ScenarioKind { AttitudeSwitching, WaypointFollowing };
enum class ControllerKind { Fxtppc, Smc, Ppc };

std::string to_string(ScenarioKind k);
std::string to_string(ControllerKind k);

/// Complete description of one closed-loop run.
struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::AttitudeSwitching;
    double horizon = 800.0;
    double dt = 0.01;
    int decimation = 1;  // log every `decimation`-th step
    ControllerKind controller = ControllerKind::Fxtppc;
    bool observer_on = true;
    bool disturbance_on = true;

    GliderParams plant;  // actual parameter set
    UncertaintyConfig uncertainty;
    double u_eps = 1e-3;  // attack-angle guard
    Vec3 initial_position = Vec3::Zero();

    std::array<PerformanceSpec, 3> envelopes{
        PerformanceSpec{1.0, 0.2, 100.0, 1.0, 1.0},
        PerformanceSpec{0.8726646259971648, 0.17453292519943295, 80.0, 1.0, 1.0},
        PerformanceSpec{0.8726646259971648, 0.2617993877991494, 100.0, 1.0, 1.0}};
    double envelope_period = 200.0;  // attitude-switching reset period

    ObserverGains observer = ObserverGains::defaults();
    FxtGains fxtppc;
    SmcGains smc;
    PpcGains ppc;
    SaturationLimits limits;

    // Waypoint-following extras.
    WaypointPlan plan;
    IlosState ilos;
    bool ilos_reset_on_switch = true;

    double T_obs_estimate = 5.0;  // observer settling estimate for diagnostics

    void validate() const;  // throws std::invalid_argument

    /// Shipped defaults for the two scenarios.
    static ScenarioConfig case1_defaults();
    static ScenarioConfig case2_defaults();
};

struct TimedEvent {
    double t;
    Event event;
};

/// Flat column table mirroring the CSV image of a run; the single source for
/// metric computation (both the simulator and the CSV reader produce one).
struct LogTable {
    std::vector<std::string> columns;       // without the trailing "events"
    std::vector<std::vector<double>> rows;  // rows[i].size() == columns.size()
    std::vector<std::string> events;        // per-row event codes, "" when none

    int column_index(const std::string& name) const;  // -1 when missing
    std::vector<double> column(const std::string& name) const;
};

/// The documented CSV column order.
const std::vector<std::string>& log_columns();

/// Typed per-step record of one run.
struct SimLog {
    std::vector<double> t;
    std::vector<Vec6> pose, nu;
    std::vector<Vec3> eta_d, e, eps, P;
    std::vector<Vec3> U_raw, U_sat;
    std::vector<Vec6> d_truth, d_hat;
    std::vector<TimedEvent> event_list;  // every event, at full step resolution
    std::optional<double> completion_time;

    // Set when the run stopped before the horizon (pitch pole, non-finite
    // state, singular input coupling).  The log up to that point is valid.
    bool aborted = false;
    double abort_time = 0.0;
    std::string abort_reason;

    LogTable to_table() const;
};

struct MetricsReport {
    Vec3 transient = Vec3::Zero();     // max |e|
    Vec3 avg_tracking = Vec3::Zero();  // L2[e]
    Vec3 avg_control = Vec3::Zero();   // L2[U], saturated commands
    Vec3 chattering = Vec3::Zero();    // L2[dU], saturated commands at log interval
    Vec3 violation_fraction = Vec3::Zero();  // rows flagged per channel, t >= stats_start
    double violation_stats_start = 200.0;
    std::optional<double> completion_time;
    SettlingBound settling{Vec3::Zero(), 0.0};
};

/// Metric primitives over logged samples.
double metric_transient(const std::vector<double>& x);                       // max |x|
double metric_l2(const std::vector<double>& t, const std::vector<double>& x);  // sqrt(trapz(x^2)/Tf)
double metric_chattering(const std::vector<double>& x);                      // sqrt(sum diff^2 / N)

/// All reported metrics from a log table (+ run facts not stored in the
/// table).  Used identically by run_scenario and by CSV re-analysis.
MetricsReport metrics_from_table(const LogTable& table, const ScenarioConfig& cfg,
                                 std::optional<double> completion_time);

struct SimResult {
    SimLog log;
    LogTable table;
    MetricsReport metrics;
};

/// Classical RK4 step with the derivative provider held over [t, t + dt].
template <class State, class Rhs>
State rk4_step(double t, const State& y, double dt, Rhs&& rhs) {
    const State k1 = rhs(t, y);
    const State k2 = rhs(t + dt / 2.0, State(y + (dt / 2.0) * k1));
    const State k3 = rhs(t + dt / 2.0, State(y + (dt / 2.0) * k2));
    const State k4 = rhs(t + dt, State(y + dt * k3));
    return State(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

/// Run one closed-loop scenario.  Throws std::invalid_argument on an invalid
/// config.  Dynamics failures (pitch pole, non-finite state, singular input
/// coupling) do not throw: the run stops, the partial log is returned with
/// `aborted` set, and metrics cover the logged samples.
SimResult run_scenario(const ScenarioConfig& config);

}  // namespace glider
