#include <sstream>

#include "json.hpp"
#include "psolve/pipeline.hpp"

namespace psolve {

namespace {

using nlohmann::ordered_json;

const char* status_name(BranchStatus s) {
    switch (s) {
        case BranchStatus::found: return "found";
        case BranchStatus::no_solution: return "no_solution";
        case BranchStatus::not_run: return "not_run";
    }
    return "not_run";
}

const char* symbolic_name(SymbolicStatus s) {
    switch (s) {
        case SymbolicStatus::pass: return "pass";
        case SymbolicStatus::fail: return "fail";
        case SymbolicStatus::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

ordered_json factors_json(const std::optional<IntegratingFactor>& r) {
    ordered_json arr = ordered_json::array();
    if (!r) return arr;
    for (const auto& f : r->factors) arr.push_back(ordered_json::array({f.p.to_string(), f.exponent.to_string()}));
    return arr;
}

ordered_json to_json(const RunReport& report) {
    ordered_json j;
    j["ode"] = {{"source", report.ode.source_text},
                {"M", report.ode.M.to_string()},
                {"N", report.ode.N.to_string()},
                {"common_factor_removed", report.ode.common_factor_removed}};
    j["degree_bound"] = report.degree_bound;
    j["num_degree_bound"] = report.num_degree_bound;
    j["mult_bound"] = report.mult_bound;

    ordered_json darboux = ordered_json::array();
    for (const auto& p : report.darboux) darboux.push_back({{"poly", p.f.to_string()}, {"cofactor", p.g.to_string()}});
    j["darboux"] = darboux;
    if (!report.rejected_hints.empty()) j["rejected_hints"] = report.rejected_hints;

    j["elementary"] = {{"status", status_name(report.elementary.status)},
                       {"factors", factors_json(report.elementary.factor)}};
    ordered_json liou;
    liou["status"] = status_name(report.liouvillian.status);
    liou["r0"] = report.liouvillian.factor ? ordered_json(report.liouvillian.factor->r0.to_string()) : ordered_json();
    liou["factors"] = factors_json(report.liouvillian.factor);
    j["liouvillian"] = liou;

    ordered_json verification;
    verification["symbolic"] = symbolic_name(report.symbolic);
    verification["numeric_drift"] = report.numeric_drift ? ordered_json(*report.numeric_drift) : ordered_json();
    if (report.numeric_error) verification["numeric_error"] = *report.numeric_error;
    j["verification"] = verification;

    if (report.include_timings) {
        j["timings"] = {{"parse_ms", report.timings.parse_ms},
                        {"darboux_ms", report.timings.darboux_ms},
                        {"elementary_ms", report.timings.elementary_ms},
                        {"liouvillian_ms", report.timings.liouvillian_ms},
                        {"verify_ms", report.timings.verify_ms},
                        {"numeric_ms", report.timings.numeric_ms}};
    }
    return j;
}

std::string to_text(const RunReport& report) {
    std::ostringstream os;
    os << "ODE: " << report.ode.source_text << '\n';
    os << "  M = " << report.ode.M << '\n';
    os << "  N = " << report.ode.N << '\n';
    if (report.ode.common_factor_removed) os << "  (common factor of M and N removed)\n";
    os << "Darboux polynomials (degree <= " << report.degree_bound << "): " << report.darboux.size() << '\n';
    for (const auto& p : report.darboux) os << "  " << p.f << "    cofactor " << p.g << '\n';
    for (const auto& h : report.rejected_hints) os << "  rejected hint: " << h << '\n';

    os << "Elementary: " << status_name(report.elementary.status) << '\n';
    if (report.elementary.factor) os << "  R = " << report.elementary.factor->to_string() << '\n';
    os << "Liouvillian: " << status_name(report.liouvillian.status) << '\n';
    if (report.liouvillian.factor) {
        os << "  r0 = " << report.liouvillian.factor->r0.to_string() << '\n';
        os << "  R = " << report.liouvillian.factor->to_string() << '\n';
    }
    if (const auto* best = report.best()) os << "R = " << best->to_string() << '\n';
    os << "Symbolic verification: " << symbolic_name(report.symbolic) << '\n';
    if (report.numeric_drift) os << "Numeric drift: " << *report.numeric_drift << '\n';
    if (report.numeric_error) os << "Numeric check failed: " << *report.numeric_error << '\n';
    if (report.include_timings) {
        const auto& t = report.timings;
        os << "Timings (ms): parse " << t.parse_ms << ", darboux " << t.darboux_ms << ", elementary "
           << t.elementary_ms << ", liouvillian " << t.liouvillian_ms << ", verify " << t.verify_ms << ", numeric "
           << t.numeric_ms << '\n';
    }
    return os.str();
}

}  // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
    return format == ReportFormat::json ? to_json(report).dump(2) : to_text(report);
}

std::string emit_reports(const std::vector<RunReport>& reports, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        return arr.dump(2);
    }
    std::string out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) out += '\n';
        out += to_text(reports[i]);
    }
    return out;
}

}  // namespace psolve
