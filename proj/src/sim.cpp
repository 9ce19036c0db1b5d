#include "glider/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glider {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::string to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::AttitudeSwitching: return "attitude_switching";
        case ScenarioKind::WaypointFollowing: return "waypoint_following";
    }
    return "?";
}

std::string to_string(ControllerKind k) {
    switch (k) {
        case ControllerKind::Fxtppc: return "fxtppc";
        case ControllerKind::Smc: return "smc";
        case ControllerKind::Ppc: return "ppc";
    }
    return "?";
}

void ScenarioConfig::validate() const {
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (decimation < 1) throw std::invalid_argument("decimation must be >= 1");
    if (!(u_eps > 0.0)) throw std::invalid_argument("u_eps must be positive");
    if (!(envelope_period > 0.0)) throw std::invalid_argument("envelope_period must be positive");
    if (!(T_obs_estimate >= 0.0)) throw std::invalid_argument("T_obs_estimate must be >= 0");
    plant.validate();
    uncertainty.validate();
    for (const auto& spec : envelopes) spec.validate();
    observer.validate();
    fxtppc.validate();
    smc.validate();
    ppc.validate();
    if (!(limits.m_b > 0.0) || !(limits.r_p1 > 0.0) || !(limits.gamma > 0.0)) {
        throw std::invalid_argument("actuator limits must be positive");
    }
    if (kind == ScenarioKind::WaypointFollowing) {
        plan.validate();
        if (!(ilos.los_distance > 0.0)) {
            throw std::invalid_argument("ilos lookahead distance must be positive");
        }
        if (!(ilos.k_I >= 0.0)) throw std::invalid_argument("ilos integral gain must be >= 0");
    }
}

ScenarioConfig ScenarioConfig::case1_defaults() { return {}; }

ScenarioConfig ScenarioConfig::case2_defaults() {
    ScenarioConfig c;
    c.kind = ScenarioKind::WaypointFollowing;
    c.horizon = 1000.0;
    c.envelopes = {PerformanceSpec{1.0, 0.5, 100.0, 1.0, 1.0},
                   PerformanceSpec{5.0 * kPi / 18.0, kPi / 18.0, 80.0, 1.0, 1.0},
                   PerformanceSpec{5.0 * kPi / 18.0, 2.0 * kPi / 45.0, 60.0, 1.0, 1.0}};
    c.plan.waypoints = {Vec2{10.0, 5.0}, Vec2{15.0, -10.0}, Vec2{30.0, -15.0}, Vec2{50.0, -5.0},
                        Vec2{50.0, 10.0}};
    c.plan.radius = 5.0;
    return c;
}

const std::vector<std::string>& log_columns() {
    static const std::vector<std::string> cols = {
        "t",
        "X", "Y", "Z", "phi", "theta", "psi",
        "u", "v", "w", "p", "q", "r",
        "Zd", "thetad", "psid",
        "e_Z", "e_theta", "e_psi",
        "eps_Z", "eps_theta", "eps_psi",
        "P_Z", "P_theta", "P_psi",
        "Uraw_mb", "Uraw_rp1", "Uraw_gamma",
        "U_mb", "U_rp1", "U_gamma",
        "d1", "d2", "d3", "d4", "d5", "d6",
        "dhat1", "dhat2", "dhat3", "dhat4", "dhat5", "dhat6",
    };
    return cols;
}

int LogTable::column_index(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

std::vector<double> LogTable::column(const std::string& name) const {
    const int idx = column_index(name);
    if (idx < 0) throw std::invalid_argument("unknown log column: " + name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[static_cast<std::size_t>(idx)]);
    return out;
}

namespace {

std::string event_code(const Event& ev) {
    switch (ev.kind) {
        case EventKind::BandViolation: return "V" + std::to_string(ev.channel);
        case EventKind::Saturation: return "S" + std::to_string(ev.channel);
        case EventKind::ReferenceSwitch: return "R";
        case EventKind::WaypointSwitch: return "W" + std::to_string(ev.channel);
        case EventKind::PathComplete: return "C";
        case EventKind::Abort: return "A";
    }
    return "?";
}

}  // namespace

LogTable SimLog::to_table() const {
    LogTable table;
    table.columns = log_columns();
    table.rows.reserve(t.size());
    table.events.reserve(t.size());
    std::size_t ei = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        std::vector<double> row;
        row.reserve(table.columns.size());
        row.push_back(t[k]);
        for (int i = 0; i < 6; ++i) row.push_back(pose[k][i]);
        for (int i = 0; i < 6; ++i) row.push_back(nu[k][i]);
        for (int i = 0; i < 3; ++i) row.push_back(eta_d[k][i]);
        for (int i = 0; i < 3; ++i) row.push_back(e[k][i]);
        for (int i = 0; i < 3; ++i) row.push_back(eps[k][i]);
        for (int i = 0; i < 3; ++i) row.push_back(P[k][i]);
        for (int i = 0; i < 3; ++i) row.push_back(U_raw[k][i]);
        for (int i = 0; i < 3; ++i) row.push_back(U_sat[k][i]);
        for (int i = 0; i < 6; ++i) row.push_back(d_truth[k][i]);
        for (int i = 0; i < 6; ++i) row.push_back(d_hat[k][i]);
        table.rows.push_back(std::move(row));

        // Events logged at non-logged steps (decimation > 1) stay only in
        // event_list; rows carry the codes of events at exactly their time.
        while (ei < event_list.size() && event_list[ei].t < t[k]) ++ei;
        std::string codes;
        while (ei < event_list.size() && event_list[ei].t == t[k]) {
            if (!codes.empty()) codes += ";";
            codes += event_code(event_list[ei].event);
            ++ei;
        }
        table.events.push_back(std::move(codes));
    }
    return table;
}

double metric_transient(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double metric_l2(const std::vector<double>& t, const std::vector<double>& x) {
    if (t.size() != x.size() || t.size() < 2) {
        throw std::invalid_argument("metric_l2 needs matching series with >= 2 samples");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        const double dt = t[k + 1] - t[k];
        acc += 0.5 * (x[k] * x[k] + x[k + 1] * x[k + 1]) * dt;
    }
    const double Tf = t.back() - t.front();
    return std::sqrt(acc / Tf);
}

double metric_chattering(const std::vector<double>& x) {
    if (x.size() < 2) throw std::invalid_argument("metric_chattering needs >= 2 samples");
    double acc = 0.0;
    for (std::size_t k = 1; k < x.size(); ++k) {
        const double d = x[k] - x[k - 1];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(x.size()));
}

MetricsReport metrics_from_table(const LogTable& table, const ScenarioConfig& cfg,
                                 std::optional<double> completion_time) {
    MetricsReport rep;
    rep.completion_time = completion_time;
    rep.settling = settling_bound(cfg.fxtppc, cfg.T_obs_estimate);

    const std::vector<double> t = table.column("t");
    if (t.size() < 2) return rep;  // aborted before two samples: nothing to measure
    const std::array<std::string, 3> e_names{"e_Z", "e_theta", "e_psi"};
    const std::array<std::string, 3> u_names{"U_mb", "U_rp1", "U_gamma"};
    const std::array<std::string, 3> p_names{"P_Z", "P_theta", "P_psi"};
    for (int i = 0; i < 3; ++i) {
        const std::vector<double> e = table.column(e_names[i]);
        const std::vector<double> u = table.column(u_names[i]);
        const std::vector<double> P = table.column(p_names[i]);
        rep.transient[i] = metric_transient(e);
        rep.avg_tracking[i] = metric_l2(t, e);
        rep.avg_control[i] = metric_l2(t, u);
        rep.chattering[i] = metric_chattering(u);

        // A sample violates when e/P reaches the clamp threshold used by the
        // in-loop transform, so this recount matches the live flags exactly.
        const double dl = cfg.envelopes[i].delta_L;
        const double dr = cfg.envelopes[i].delta_R;
        std::size_t total = 0;
        std::size_t bad = 0;
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (t[k] < rep.violation_stats_start) continue;
            ++total;
            const double x = e[k] / P[k];
            if (x >= dr - kBandClampMargin || x <= -dl + kBandClampMargin) ++bad;
        }
        rep.violation_fraction[i] =
            total == 0 ? 0.0 : static_cast<double>(bad) / static_cast<double>(total);
    }
    return rep;
}

namespace {

using State24 = Eigen::Matrix<double, 24, 1>;

struct ReferenceSample {
    Vec3 eta_d;
    Vec3 eta_d_dot;
    double xi_d;
};

int schedule_block(double t) { return std::min(static_cast<int>(t / 200.0), 3); }

}  // namespace

SimResult run_scenario(const ScenarioConfig& config) {
    config.validate();

    const ModeledParams mod = modeled_params(config.plant, config.uncertainty);
    const FtpfKind env_kind =
        config.controller == ControllerKind::Ppc ? FtpfKind::PpcBaseline : FtpfKind::Sech;

    VehicleState st;
    st.pose.head<3>() = config.initial_position;
    ObserverState obs;
    SlidingState sld;
    WaypointPlan plan = config.plan;
    IlosState ilos = config.ilos;

    double gamma_prev = 0.0;
    double env_clock_origin = 0.0;  // waypoint scenario: time of last envelope reset
    int prev_block = 0;
    std::array<bool, 3> prev_sat{false, false, false};
    std::array<bool, 3> prev_viol{false, false, false};

    const long n = std::lround(config.horizon / config.dt);
    SimLog log;
    const std::size_t expected = static_cast<std::size_t>(n / config.decimation) + 1;
    log.t.reserve(expected);
    log.pose.reserve(expected);
    log.nu.reserve(expected);
    log.eta_d.reserve(expected);
    log.e.reserve(expected);
    log.eps.reserve(expected);
    log.P.reserve(expected);
    log.U_raw.reserve(expected);
    log.U_sat.reserve(expected);
    log.d_truth.reserve(expected);
    log.d_hat.reserve(expected);

    double current_t = 0.0;
    const auto record_abort = [&](const std::exception& ex) {
        log.aborted = true;
        log.abort_time = current_t;
        log.abort_reason = ex.what();
        log.event_list.push_back({current_t, Event{EventKind::Abort, -1}});
    };
    try {
    for (long k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * config.dt;
        current_t = t;
        std::vector<Event> step_events;

        // --- reference / guidance ---
        ReferenceSample ref;
        double t_star = 0.0;
        if (config.kind == ScenarioKind::AttitudeSwitching) {
            const Case1Reference r = case1_reference(t);
            ref.eta_d_dot = Vec3(r.Zdot_d, 0.0, 0.0);
            ref.xi_d = r.xi_d;
            ref.eta_d = Vec3(r.Z_d, 0.0, r.psi_d);  // theta_d filled below
            t_star = std::fmod(t, config.envelope_period);
            const int block = schedule_block(t);
            if (k > 0 && block != prev_block) step_events.push_back({EventKind::ReferenceSwitch, -1});
            prev_block = block;
        } else {
            const Vec2 position(st.pose[0], st.pose[1]);
            if (waypoint_update(plan, position, t)) {
                env_clock_origin = t;  // restart every channel's envelope
                if (config.ilos_reset_on_switch) ilos.sigma_int = 0.0;
                if (plan.complete) {
                    step_events.push_back({EventKind::PathComplete, -1});
                } else {
                    step_events.push_back(
                        {EventKind::WaypointSwitch, static_cast<int>(plan.index)});
                }
            }
            const Vec2 seg_start = plan.index == 0
                                       ? Vec2(config.initial_position[0], config.initial_position[1])
                                       : plan.waypoints[plan.index - 1];
            const Vec2 seg_end = plan.target();
            const double chi = segment_azimuth(seg_start, seg_end);
            const double y_e = cross_track(position, seg_start, seg_end);
            const IlosOutput ilos_out = ilos_step(ilos, y_e, config.dt);
            const Case1Reference r = case1_reference(t);  // shared depth ramp + glide schedule
            ref.eta_d_dot = Vec3(r.Zdot_d, 0.0, 0.0);
            ref.xi_d = r.xi_d;
            ref.eta_d = Vec3(r.Z_d, 0.0, wrap_pi(chi + ilos_out.psi_d_rel));
            t_star = t - env_clock_origin;
            const int block = schedule_block(t);
            if (k > 0 && block != prev_block) step_events.push_back({EventKind::ReferenceSwitch, -1});
            prev_block = block;
        }
        const double alpha = attack_angle(st.nu, config.u_eps);
        ref.eta_d[1] = pitch_reference(ref.xi_d, alpha);

        // --- errors ---
        const Mat36 J = rotation_map(st.pose);
        const Vec3 eta_dot = J * st.nu;
        Vec3 e(st.pose[2] - ref.eta_d[0], st.pose[4] - ref.eta_d[1],
               wrap_pi(st.pose[5] - ref.eta_d[2]));
        const Vec3 edot = eta_dot - ref.eta_d_dot;
        const Vec3 eta_dd_d = Vec3::Zero();

        // --- envelopes & transforms (not used by the smc law) ---
        Vec3 Pv = Vec3::Zero();
        Vec3 eps1 = Vec3::Zero(), eps2 = Vec3::Zero(), lam = Vec3::Ones(), lamd = Vec3::Zero(),
             kap = Vec3::Zero();
        std::array<bool, 3> viol{false, false, false};
        for (int i = 0; i < 3; ++i) {
            const EnvelopeValue env = ftpf_eval(env_kind, t_star, config.envelopes[i]);
            Pv[i] = env.P;
            if (config.controller == ControllerKind::Smc) continue;
            const TransformedError tr =
                transform_error(e[i], edot[i], env, config.envelopes[i].delta_L,
                                config.envelopes[i].delta_R);
            eps1[i] = tr.eps;
            eps2[i] = tr.epsd;
            lam[i] = tr.lam;
            lamd[i] = tr.lamd;
            kap[i] = tr.kappa;
            viol[i] = tr.violated;
        }

        // --- control ---
        const Vec6 d_hat = config.observer_on ? obs.d_hat() : Vec6::Zero();
        const CompactTerms ct = compact_terms(mod, st, gamma_prev);
        Vec3 U_raw;
        switch (config.controller) {
            case ControllerKind::Fxtppc: {
                const Vec3 s = sld.surface(eps2);
                U_raw = fxtppc_control(eps1, eps2, lam, kap, s, eta_dd_d, ct, d_hat,
                                       config.fxtppc);
                break;
            }
            case ControllerKind::Smc:
                U_raw = smc_control(e, edot, eta_dd_d, ct, config.smc);
                break;
            case ControllerKind::Ppc:
                U_raw = ppc_control(eps1, eps2, lam, lamd, kap, eta_dd_d, ct, d_hat, config.ppc);
                break;
        }
        const SaturationResult sat = saturate(U_raw, config.limits);
        if (config.controller == ControllerKind::Fxtppc) {
            std::array<bool, 3> freeze{};
            for (int i = 0; i < 3; ++i) freeze[i] = sat.active[i] || viol[i];
            sliding_advance(sld, eps1, eps2, config.fxtppc, config.dt, freeze);
        }

        // --- events (violation/saturation on onset only) ---
        for (int i = 0; i < 3; ++i) {
            const bool v = config.controller != ControllerKind::Smc && viol[i];
            if (v && !prev_viol[i]) step_events.push_back({EventKind::BandViolation, i});
            prev_viol[i] = v;
            if (sat.active[i] && !prev_sat[i]) step_events.push_back({EventKind::Saturation, i});
            prev_sat[i] = sat.active[i];
        }
        for (const Event& ev : step_events) log.event_list.push_back({t, ev});

        // --- disturbance truth (actual plant at the applied command) ---
        const Vec6 tau_d = config.disturbance_on ? env_disturbance(t) : Vec6::Zero();
        const PlantRates pr = plant_rhs(config.plant, st, sat.U, tau_d);
        const Vec6 d_truth = truth_disturbance(config.plant, mod, st, sat.U, tau_d, pr.nu_dot);

        // --- log ---
        if (k % config.decimation == 0) {
            log.t.push_back(t);
            log.pose.push_back(st.pose);
            log.nu.push_back(st.nu);
            log.eta_d.push_back(ref.eta_d);
            log.e.push_back(e);
            log.eps.push_back(eps1);
            log.P.push_back(Pv);
            log.U_raw.push_back(U_raw);
            log.U_sat.push_back(sat.U);
            log.d_truth.push_back(d_truth);
            log.d_hat.push_back(d_hat);
        }

        // --- integrate one step (ZOH on sat.U) ---
        if (k == n) break;
        State24 y;
        y.segment<6>(0) = st.pose;
        y.segment<6>(6) = st.nu;
        y.segment<6>(12) = obs.varpi;
        y.segment<6>(18) = obs.Phi;
        const Vec3 U_applied = sat.U;
        const auto rhs = [&](double tt, const State24& yy) -> State24 {
            VehicleState s2;
            s2.pose = yy.segment<6>(0);
            s2.nu = yy.segment<6>(6);
            const Vec6 tau = config.disturbance_on ? env_disturbance(tt) : Vec6::Zero();
            const PlantRates r2 = plant_rhs(config.plant, s2, U_applied, tau);
            State24 out = State24::Zero();
            out.segment<6>(0) = r2.pose_dot;
            out.segment<6>(6) = r2.nu_dot;
            if (config.observer_on) {
                ObserverState o2;
                o2.varpi = yy.segment<6>(12);
                o2.Phi = yy.segment<6>(18);
                const ObserverRates orr =
                    observer_rhs(config.observer, o2, mod, s2.pose, s2.nu, U_applied);
                out.segment<6>(12) = orr.varpi_dot;
                out.segment<6>(18) = orr.Phi_dot;
            }
            return out;
        };
        y = rk4_step(t, y, config.dt, rhs);
        if (!y.allFinite()) throw NonFiniteStateError(t + config.dt);
        st.pose = y.segment<6>(0);
        st.nu = y.segment<6>(6);
        obs.varpi = y.segment<6>(12);
        obs.Phi = y.segment<6>(18);
        gamma_prev = U_applied[2];
    }
    } catch (const PoleError& ex) {
        record_abort(ex);
    } catch (const SingularGError& ex) {
        record_abort(ex);
    } catch (const NonFiniteStateError& ex) {
        record_abort(ex);
    }

    log.completion_time = plan.completion_time;

    SimResult result;
    result.table = log.to_table();
    result.metrics = metrics_from_table(result.table, config, log.completion_time);
    result.log = std::move(log);
    return result;
}

}  // namespace glider
