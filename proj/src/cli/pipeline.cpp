#include "psolve/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

namespace psolve {

namespace {

class Stopwatch {
public:
    double lap_ms() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

BranchResult to_branch(std::optional<IntegratingFactor> r) {
    BranchResult b;
    b.status = r ? BranchStatus::found : BranchStatus::no_solution;
    b.factor = std::move(r);
    return b;
}

}  // namespace

const IntegratingFactor* RunReport::best() const {
    if (liouvillian.factor) return &*liouvillian.factor;
    if (elementary.factor) return &*elementary.factor;
    return nullptr;
}

RunReport run_pipeline(const RunOptions& options) {
    RunReport report;
    report.degree_bound = options.degree_bound;
    report.num_degree_bound = options.num_degree_bound;
    report.mult_bound = options.mult_bound;
    report.include_timings = options.include_timings;

    Stopwatch clock;
    report.ode = parse_ode(options.ode);
    std::vector<Poly> hints;
    for (const auto& h : options.hints) hints.push_back(parse_poly(h));
    const VectorField vf(report.ode.M, report.ode.N);
    report.timings.parse_ms = clock.lap_ms();

    report.darboux = find_darboux(vf, options.degree_bound, options.exec, hints);
    for (std::size_t i = 0; i < hints.size(); ++i) {
        if (hints[i].is_constant() || !cofactor(vf, hints[i])) report.rejected_hints.push_back(options.hints[i]);
    }
    report.timings.darboux_ms = clock.lap_ms();

    report.elementary = to_branch(solve_elementary(vf, report.darboux));
    report.timings.elementary_ms = clock.lap_ms();

    if (report.elementary.status != BranchStatus::found || options.force_liouvillian) {
        report.liouvillian = to_branch(solve_liouvillian(vf, report.darboux, options.num_degree_bound,
                                                         options.mult_bound, options.exec));
    }
    report.timings.liouvillian_ms = clock.lap_ms();

    bool any = false;
    bool all_pass = true;
    for (const auto* branch : {&report.elementary, &report.liouvillian}) {
        if (!branch->factor) continue;
        any = true;
        all_pass = all_pass && verify_symbolic(vf, *branch->factor).passed;
    }
    report.symbolic = !any ? SymbolicStatus::not_applicable : (all_pass ? SymbolicStatus::pass : SymbolicStatus::fail);
    report.timings.verify_ms = clock.lap_ms();

    if (options.numeric && report.best() != nullptr) {
        NumericCheckConfig cfg;
        cfg.x_start = options.from_x;
        cfg.y_start = options.from_y;
        cfg.x_end = options.to_x.value_or(options.from_x + 1);
        cfg.step = options.step;
        try {
            report.numeric_drift = numeric_drift(vf, *report.best(), cfg);
        } catch (const NumericError& e) {
            report.numeric_error = e.what();
        }
    }
    report.timings.numeric_ms = clock.lap_ms();
    return report;
}

int exit_code(const RunReport& report) { return report.found() ? 0 : 1; }

std::vector<std::string> read_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

}  // namespace psolve
