#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psolve/darboux.hpp"
#include "psolve/execution.hpp"
#include "psolve/parse.hpp"
#include "psolve/psengine.hpp"
#include "psolve/verify.hpp"

namespace psolve {

struct RunOptions {
    std::string ode;
    int degree_bound = 3;
    int num_degree_bound = 4;
    int mult_bound = 2;
    std::vector<std::string> hints;
    bool force_liouvillian = false;
    bool numeric = false;
    Rational from_x = 1;
    Rational from_y = 1;
    /// Defaults to from_x + 1.
    std::optional<Rational> to_x;
    Rational step = Rational(1, 1000);
    bool include_timings = true;
    Execution exec = Execution::parallel;
};

enum class BranchStatus { found, no_solution, not_run };

struct BranchResult {
    BranchStatus status = BranchStatus::not_run;
    std::optional<IntegratingFactor> factor;
};

enum class SymbolicStatus { pass, fail, not_applicable };

struct StageTimings {
    double parse_ms = 0;
    double darboux_ms = 0;
    double elementary_ms = 0;
    double liouvillian_ms = 0;
    double verify_ms = 0;
    double numeric_ms = 0;
};

struct RunReport {
    OdeSpec ode;
    int degree_bound = 0;
    int num_degree_bound = 0;
    int mult_bound = 0;
    std::vector<DarbouxPair> darboux;
    /// Hints that failed certification.
    std::vector<std::string> rejected_hints;
    BranchResult elementary;
    BranchResult liouvillian;
    SymbolicStatus symbolic = SymbolicStatus::not_applicable;
    std::optional<double> numeric_drift;
    std::optional<std::string> numeric_error;
    StageTimings timings;
    bool include_timings = true;

    bool found() const {
        return elementary.status == BranchStatus::found || liouvillian.status == BranchStatus::found;
    }
    /// The Liouvillian result when present, else the elementary one.
    const IntegratingFactor* best() const;
};

/// Parse, search, solve, verify. Throws ParseError / ZeroDenominator for
/// bad input (including bad hints).
RunReport run_pipeline(const RunOptions& options);

enum class ReportFormat { text, json };

std::string emit_report(const RunReport& report, ReportFormat format);
/// JSON: one array of report objects. Text: reports separated by blank lines.
std::string emit_reports(const std::vector<RunReport>& reports, ReportFormat format);

/// 0 when either branch found a factor, 1 otherwise.
int exit_code(const RunReport& report);

/// One ODE per line; blank lines and '#' comments skipped.
std::vector<std::string> read_fixtures(const std::string& path);

}  // namespace psolve
