#include "glider/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace glider {

namespace {

nlohmann::ordered_json vec3_json(const Vec3& v) {
    return nlohmann::ordered_json::array({v[0], v[1], v[2]});
}

}  // namespace

std::string metrics_json_text(const ScenarioConfig& cfg, const std::vector<RunSummary>& runs) {
    nlohmann::ordered_json doc;
    doc["scenario"] = to_string(cfg.kind);
    doc["horizon"] = cfg.horizon;
    doc["dt"] = cfg.dt;
    doc["decimation"] = cfg.decimation;
    doc["log_interval"] = cfg.dt * cfg.decimation;
    doc["channels"] = nlohmann::ordered_json::array({"Z", "theta", "psi"});

    nlohmann::ordered_json runs_json;
    for (const auto& run : runs) {
        const MetricsReport& rep = run.metrics;
        nlohmann::ordered_json r;
        r["transient"] = vec3_json(rep.transient);
        r["avg_tracking"] = vec3_json(rep.avg_tracking);
        r["avg_control"] = vec3_json(rep.avg_control);
        r["chattering"] = vec3_json(rep.chattering);
        r["violation_fraction"] = vec3_json(rep.violation_fraction);
        r["violation_stats_start"] = rep.violation_stats_start;
        if (rep.completion_time) {
            r["completion_time"] = *rep.completion_time;
        } else {
            r["completion_time"] = nullptr;
        }
        nlohmann::ordered_json settle;
        settle["per_channel"] = vec3_json(rep.settling.per_channel);
        settle["total"] = rep.settling.total;
        r["settling_bound"] = settle;
        r["aborted"] = run.aborted;
        if (run.aborted) {
            r["abort_time"] = run.abort_time;
            r["abort_reason"] = run.abort_reason;
        }
        runs_json[run.name] = std::move(r);
    }
    doc["runs"] = std::move(runs_json);
    return doc.dump(2) + "\n";
}

std::string comparison_table(const std::vector<RunSummary>& runs) {
    struct RowDef {
        const char* label;
        Vec3 MetricsReport::* member;
        int channel;
    };
    static const char* channels[3] = {"Z", "theta", "psi"};
    std::vector<RowDef> defs;
    for (int c = 0; c < 3; ++c) defs.push_back({"transient", &MetricsReport::transient, c});
    for (int c = 0; c < 3; ++c) defs.push_back({"avg_tracking", &MetricsReport::avg_tracking, c});
    for (int c = 0; c < 3; ++c) defs.push_back({"avg_control", &MetricsReport::avg_control, c});
    for (int c = 0; c < 3; ++c) defs.push_back({"chattering", &MetricsReport::chattering, c});

    constexpr int label_w = 22;
    constexpr int col_w = 16;
    std::ostringstream os;
    os << std::left << std::setw(label_w) << "metric";
    for (const auto& run : runs) os << std::setw(col_w) << run.name;
    os << "\n";
    for (const auto& def : defs) {
        std::ostringstream lbl;
        lbl << def.label << "[" << channels[def.channel] << "]";
        os << std::setw(label_w) << lbl.str();
        double best = std::numeric_limits<double>::infinity();
        for (const auto& run : runs) {
            best = std::min(best, (run.metrics.*(def.member))[def.channel]);
        }
        for (const auto& run : runs) {
            const double v = (run.metrics.*(def.member))[def.channel];
            std::ostringstream cell;
            cell << std::setprecision(6) << std::scientific << v;
            if (v == best && runs.size() > 1) cell << "*";
            os << std::setw(col_w) << cell.str();
        }
        os << "\n";
    }
    // Flag truncated runs so the matrix is not read as like-for-like.
    for (const auto& run : runs) {
        if (run.aborted) {
            os << "note: " << run.name << " stopped early at t=" << run.abort_time
               << " s (metrics cover the logged span)\n";
        }
    }
    return os.str();
}

}  // namespace glider
