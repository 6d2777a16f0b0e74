#include "qdet/identitylab.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

namespace qdet {

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return out;
}

void write_summary(std::ostream& os, const Summary& s) {
    os << "summary: pass=" << s.pass << " fail=" << s.fail << " evidence_pass=" << s.evidence_pass
       << " evidence_fail=" << s.evidence_fail << " skipped=" << s.skipped << '\n';
}

std::string point_text(const CheckResult& r) {
    std::string out;
    for (const auto& [k, v] : r.point) {
        if (!out.empty()) out += ' ';
        out += k + "=" + v;
    }
    return out;
}

}  // namespace

std::string report_to_json(const Report& report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["version"] = kReportVersion;
    j["seed"] = report.seed;
    j["started"] = report.started ? ordered_json(*report.started) : ordered_json(nullptr);
    j["summary"] = {{"pass", report.summary.pass},
                    {"fail", report.summary.fail},
                    {"evidence_pass", report.summary.evidence_pass},
                    {"evidence_fail", report.summary.evidence_fail},
                    {"skipped", report.summary.skipped}};
    ordered_json results = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json point = ordered_json::object();
        for (const auto& [k, v] : r.point) point[k] = v;
        const bool witness = r.status != CheckStatus::pass;
        ordered_json row;
        row["id"] = r.id;
        row["n"] = r.n;
        row["trial"] = r.trial;
        row["seed"] = r.seed;
        row["point"] = std::move(point);
        row["status"] = std::string(status_name(r.status));
        row["lhs"] = witness && !r.lhs.empty() ? ordered_json(r.lhs) : ordered_json(nullptr);
        row["rhs"] = witness && !r.rhs.empty() ? ordered_json(r.rhs) : ordered_json(nullptr);
        row["detail"] = witness && !r.detail.empty() ? ordered_json(r.detail) : ordered_json(nullptr);
        results.push_back(std::move(row));
    }
    j["results"] = std::move(results);
    return j.dump(2) + "\n";
}

std::string report_to_text(const Report& report) {
    std::ostringstream os;
    if (report.summary.evidence_fail > 0) {
        os << "!!! " << report.summary.evidence_fail
           << " evidence-fail result(s): a conjectured identity failed at a valid point (witnesses below)\n";
    }
    for (const auto& r : report.results) {
        os << upper(status_name(r.status)) << " check=" << r.id << " n=" << r.n << " trial=" << r.trial << '\n';
        if (r.status == CheckStatus::pass) continue;
        if (!r.point.empty()) os << "  point: " << point_text(r) << '\n';
        if (!r.detail.empty()) os << "  detail: " << r.detail << '\n';
        if (!r.lhs.empty()) os << "  lhs: " << r.lhs << '\n';
        if (!r.rhs.empty()) os << "  rhs: " << r.rhs << '\n';
    }
    os << "seed: " << report.seed << '\n';
    write_summary(os, report.summary);
    return os.str();
}

}  // namespace qdet
