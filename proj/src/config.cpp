#include "glider/config.hpp"

#include <cctype>
#include <optional>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace glider {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double to_double(const std::string& section, const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size()) {
        throw ConfigError("[" + section + "] " + key + ": '" + raw + "' is not a number");
    }
    return x;
}

int to_int(const std::string& section, const std::string& key, const std::string& raw) {
    const double x = to_double(section, key, raw);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x) {
        throw ConfigError("[" + section + "] " + key + ": '" + raw + "' is not an integer");
    }
    return i;
}

bool to_bool(const std::string& section, const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw ConfigError("[" + section + "] " + key + ": '" + raw +
                      "' is not a boolean (use on/off, true/false, 1/0)");
}

std::vector<double> to_list(const std::string& section, const std::string& key,
                            const std::string& raw, std::size_t want) {
    std::istringstream is(raw);
    std::vector<double> out;
    std::string tok;
    while (is >> tok) out.push_back(to_double(section, key, tok));
    if (out.size() != want) {
        throw ConfigError("[" + section + "] " + key + ": expected " + std::to_string(want) +
                          " space-separated numbers, got " + std::to_string(out.size()));
    }
    return out;
}

std::vector<Vec2> to_waypoints(const std::string& section, const std::string& key,
                               const std::string& raw) {
    std::vector<Vec2> out;
    std::size_t start = 0;
    while (start <= raw.size()) {
        const std::size_t semi = raw.find(';', start);
        const std::string part =
            trim(semi == std::string::npos ? raw.substr(start) : raw.substr(start, semi - start));
        if (!part.empty()) {
            const std::vector<double> xy = to_list(section, key, part, 2);
            out.push_back(Vec2(xy[0], xy[1]));
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (out.empty()) {
        throw ConfigError("[" + section + "] " + key + ": expected 'X Y; X Y; ...' pairs");
    }
    return out;
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
    ParsedConfig cfg;
    std::istringstream is(text);
    std::string line;
    std::string section;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
            }
            section = trim(s.substr(1, s.size() - 2));
            cfg.sections[section];  // a section may be empty
            continue;
        }
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        if (section.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": key before any [section]");
        }
        const std::string key = trim(s.substr(0, eq));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        cfg.sections[section][key] = trim(s.substr(eq + 1));
    }
    return cfg;
}

ParsedConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config_text(buf.str());
}

void apply_override(ParsedConfig& cfg, const std::string& assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("override '" + assignment + "' must look like section.key=value");
    }
    const std::string lhs = trim(assignment.substr(0, eq));
    const std::size_t dot = lhs.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= lhs.size()) {
        throw ConfigError("override '" + assignment + "' must look like section.key=value");
    }
    cfg.sections[trim(lhs.substr(0, dot))][trim(lhs.substr(dot + 1))] =
        trim(assignment.substr(eq + 1));
}

namespace {

/// Working copy of the parsed text; consumed keys are erased so leftovers can
/// be reported as unknown.
struct KeyBag {
    std::map<std::string, std::map<std::string, std::string>> sections;

    std::optional<std::string> take(const std::string& section, const std::string& key) {
        auto sit = sections.find(section);
        if (sit == sections.end()) return std::nullopt;
        auto kit = sit->second.find(key);
        if (kit == sit->second.end()) return std::nullopt;
        std::string held = kit->second;
        sit->second.erase(kit);
        return held;
    }

    void assert_empty() const {
        for (const auto& [sec, keys] : sections) {
            for (const auto& [key, value] : keys) {
                (void)value;
                throw ConfigError("unknown config entry [" + sec + "] " + key + "\n" +
                                  config_schema_help());
            }
        }
    }
};

}  // namespace

ScenarioConfig build_scenario(const ParsedConfig& parsed) {
    KeyBag bag{parsed.sections};

    const std::optional<std::string> kind_raw = bag.take("scenario", "kind");
    if (!kind_raw) {
        throw ConfigError("config must set [scenario] kind\n" + config_schema_help());
    }
    ScenarioConfig cfg;
    if (*kind_raw == "attitude_switching") {
        cfg = ScenarioConfig::case1_defaults();
    } else if (*kind_raw == "waypoint_following") {
        cfg = ScenarioConfig::case2_defaults();
    } else {
        throw ConfigError("[scenario] kind: '" + *kind_raw +
                          "' (use attitude_switching or waypoint_following)");
    }

    const auto num = [&](const char* sec, const char* key, double& dst) {
        if (const auto v = bag.take(sec, key)) dst = to_double(sec, key, *v);
    };
    const auto boolean = [&](const char* sec, const char* key, bool& dst) {
        if (const auto v = bag.take(sec, key)) dst = to_bool(sec, key, *v);
    };
    const auto vec3 = [&](const char* sec, const char* key, Vec3& dst) {
        if (const auto v = bag.take(sec, key)) {
            const std::vector<double> xs = to_list(sec, key, *v, 3);
            dst = Vec3(xs[0], xs[1], xs[2]);
        }
    };
    const auto vec6 = [&](const char* sec, const char* key, Vec6& dst) {
        if (const auto v = bag.take(sec, key)) {
            const std::vector<double> xs = to_list(sec, key, *v, 6);
            for (int i = 0; i < 6; ++i) dst[i] = xs[static_cast<std::size_t>(i)];
        }
    };

    // [scenario]
    if (const auto v = bag.take("scenario", "controller")) {
        if (*v == "fxtppc") cfg.controller = ControllerKind::Fxtppc;
        else if (*v == "smc") cfg.controller = ControllerKind::Smc;
        else if (*v == "ppc") cfg.controller = ControllerKind::Ppc;
        else throw ConfigError("[scenario] controller: '" + *v + "' (use fxtppc, smc or ppc)");
    }
    num("scenario", "horizon", cfg.horizon);
    num("scenario", "dt", cfg.dt);
    if (const auto v = bag.take("scenario", "decimation")) {
        cfg.decimation = to_int("scenario", "decimation", *v);
    }
    boolean("scenario", "observer", cfg.observer_on);
    boolean("scenario", "disturbance", cfg.disturbance_on);
    num("scenario", "u_eps", cfg.u_eps);
    num("scenario", "initial_x", cfg.initial_position[0]);
    num("scenario", "initial_y", cfg.initial_position[1]);
    num("scenario", "initial_z", cfg.initial_position[2]);
    num("scenario", "envelope_period", cfg.envelope_period);

    // [plant]
    GliderParams& p = cfg.plant;
    num("plant", "m1", p.m1);
    num("plant", "m2", p.m2);
    num("plant", "m3", p.m3);
    num("plant", "I1", p.I1);
    num("plant", "I2", p.I2);
    num("plant", "I3", p.I3);
    num("plant", "m_p", p.m_p);
    num("plant", "m_h", p.m_h);
    num("plant", "R_p", p.R_p);
    num("plant", "r_b", p.r_b);
    num("plant", "K_D", p.K_D);
    num("plant", "K_D0", p.K_D0);
    num("plant", "K_L", p.K_L);
    num("plant", "K_L0", p.K_L0);
    num("plant", "K_beta", p.K_beta);
    num("plant", "K_MR", p.K_MR);
    num("plant", "K_p", p.K_p);
    num("plant", "K_M", p.K_M);
    num("plant", "K_M0", p.K_M0);
    num("plant", "K_q", p.K_q);
    num("plant", "K_MY", p.K_MY);
    num("plant", "K_r", p.K_r);
    num("plant", "g", p.g);

    // [uncertainty]
    num("uncertainty", "fraction", cfg.uncertainty.fraction);
    boolean("uncertainty", "scale_M", cfg.uncertainty.scale_M);
    boolean("uncertainty", "scale_C", cfg.uncertainty.scale_C);
    boolean("uncertainty", "scale_D", cfg.uncertainty.scale_D);
    boolean("uncertainty", "scale_B", cfg.uncertainty.scale_B);
    boolean("uncertainty", "scale_E", cfg.uncertainty.scale_E);

    // [envelope_Z] / [envelope_theta] / [envelope_psi]
    const std::array<const char*, 3> env_secs{"envelope_Z", "envelope_theta", "envelope_psi"};
    for (int i = 0; i < 3; ++i) {
        PerformanceSpec& spec = cfg.envelopes[static_cast<std::size_t>(i)];
        num(env_secs[static_cast<std::size_t>(i)], "P0", spec.P0);
        num(env_secs[static_cast<std::size_t>(i)], "P_inf", spec.P_inf);
        num(env_secs[static_cast<std::size_t>(i)], "T", spec.T);
        num(env_secs[static_cast<std::size_t>(i)], "delta_L", spec.delta_L);
        num(env_secs[static_cast<std::size_t>(i)], "delta_R", spec.delta_R);
    }

    // [observer]
    vec6("observer", "iota1", cfg.observer.iota1);
    vec6("observer", "iota2", cfg.observer.iota2);
    vec6("observer", "varsigma", cfg.observer.varsigma);

    // [fxtppc]
    vec3("fxtppc", "varrho", cfg.fxtppc.varrho);
    vec3("fxtppc", "mu", cfg.fxtppc.mu);
    vec3("fxtppc", "k1", cfg.fxtppc.k1);
    vec3("fxtppc", "k2", cfg.fxtppc.k2);

    // [smc]
    vec3("smc", "c0", cfg.smc.c0);
    vec3("smc", "c1", cfg.smc.c1);
    vec3("smc", "c2", cfg.smc.c2);

    // [ppc]
    vec3("ppc", "l0", cfg.ppc.l0);
    vec3("ppc", "l2", cfg.ppc.l2);
    num("ppc", "l1_margin", cfg.ppc.l1_margin);

    // [limits]
    num("limits", "m_b", cfg.limits.m_b);
    num("limits", "r_p1", cfg.limits.r_p1);
    num("limits", "gamma", cfg.limits.gamma);

    // [path]
    if (const auto v = bag.take("path", "waypoints")) {
        cfg.plan.waypoints = to_waypoints("path", "waypoints", *v);
    }
    num("path", "radius", cfg.plan.radius);
    num("path", "los_distance", cfg.ilos.los_distance);
    num("path", "k_I", cfg.ilos.k_I);
    boolean("path", "reset_integrator_on_switch", cfg.ilos_reset_on_switch);

    // [diagnostics]
    num("diagnostics", "T_obs", cfg.T_obs_estimate);

    bag.assert_empty();
    try {
        cfg.validate();
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(std::string("invalid configuration: ") + ex.what());
    }
    return cfg;
}

std::string config_schema_help() {
    return "config grammar: '[section]' headers, 'key = value' lines, full-line comments "
           "starting with '#' or ';'.  Sections: [scenario] kind (attitude_switching | "
           "waypoint_following, required), controller (fxtppc|smc|ppc), horizon, dt, decimation, "
           "observer (on/off), disturbance (on/off), u_eps, initial_x/y/z, envelope_period; "
           "[plant] m1 m2 m3 I1 I2 I3 m_p m_h R_p r_b K_D K_D0 K_L K_L0 K_beta K_MR K_p K_M "
           "K_M0 K_q K_MY K_r g; [uncertainty] fraction, scale_M/C/D/B/E (on/off); "
           "[envelope_Z|envelope_theta|envelope_psi] P0, P_inf, T, delta_L, delta_R; [observer] "
           "iota1, iota2, varsigma (6 numbers each); [fxtppc] varrho, mu, k1, k2 (3 numbers "
           "each); [smc] c0, c1, c2; [ppc] l0, l2, l1_margin; [limits] m_b, r_p1, gamma; [path] "
           "waypoints ('X Y; X Y; ...'), radius, los_distance, k_I, reset_integrator_on_switch; "
           "[diagnostics] T_obs.  Any entry can be overridden on the command line with "
           "--set section.key=value.";
}

}  // namespace glider
