// psolve: integrating factors for dy/dx = M/N by Darboux polynomial search.
//
// Exit status: 0 when an integrating factor was found, 1 when none was,
// 2 on bad input.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psolve/pipeline.hpp"

namespace {

psolve::Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return psolve::Rational::from_string(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected a rational such as 1, -2 or 3/4");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Find Liouvillian integrating factors of dy/dx = M/N"};

    psolve::RunOptions opts;
    std::string from = "1,1";
    std::string to;
    std::string step = "1/1000";
    bool json = false;
    bool no_timings = false;
    bool serial = false;
    std::string fixtures;

    auto* ode_opt = app.add_option("--ode", opts.ode, "ODE, e.g. \"dy/dx = y^2 + y*x + x - 1\"");
    auto* fixtures_opt = app.add_option("--fixtures", fixtures, "Run every ODE in a fixture file")
                             ->expected(0, 1)
                             ->default_str(PSOLVE_DEFAULT_FIXTURES);
    ode_opt->excludes(fixtures_opt);
    app.add_option("--degree-bound", opts.degree_bound, "Maximum Darboux polynomial degree")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--num-degree-bound", opts.num_degree_bound, "Maximum degree of the numerator of r0")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app.add_option("--mult-bound", opts.mult_bound, "Maximum multiplicity of each factor of r0's denominator")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app.add_option("--hint", opts.hints, "Candidate Darboux polynomial (repeatable)");
    app.add_flag("--force-liouvillian", opts.force_liouvillian, "Run the Liouvillian branch even if the elementary one succeeds");
    app.add_flag("--numeric", opts.numeric, "Check first-integral drift along an RK4 trajectory");
    app.add_option("--from", from, "Start point x,y of the numeric check")->capture_default_str();
    app.add_option("--to", to, "End abscissa of the numeric check (default: start + 1)");
    app.add_option("--step", step, "RK4 step of the numeric check")->capture_default_str();
    app.add_flag("--json", json, "Emit the JSON report");
    app.add_flag("--no-timings", no_timings, "Omit stage timings (byte-stable output)");
    app.add_flag("--serial", serial, "Use the serial reference search loops");

    try {
        app.parse(argc, argv);
        if (ode_opt->count() == 0 && fixtures_opt->count() == 0)
            throw CLI::RequiredError("--ode or --fixtures");
        const auto comma = from.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--from", "expected x,y");
        opts.from_x = parse_rational_flag(from.substr(0, comma), "--from");
        opts.from_y = parse_rational_flag(from.substr(comma + 1), "--from");
        if (!to.empty()) opts.to_x = parse_rational_flag(to, "--to");
        opts.step = parse_rational_flag(step, "--step");
        if (opts.step.sign() <= 0) throw CLI::ValidationError("--step", "must be positive");
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    opts.include_timings = !no_timings;
    opts.exec = serial ? psolve::Execution::serial : psolve::Execution::parallel;
    const auto format = json ? psolve::ReportFormat::json : psolve::ReportFormat::text;

    try {
        if (fixtures_opt->count() > 0) {
            if (fixtures.empty()) fixtures = PSOLVE_DEFAULT_FIXTURES;
            std::vector<psolve::RunReport> reports;
            int rc = 0;
            for (const auto& line : psolve::read_fixtures(fixtures)) {
                auto run = opts;
                run.ode = line;
                reports.push_back(psolve::run_pipeline(run));
                rc = std::max(rc, psolve::exit_code(reports.back()));
            }
            std::cout << psolve::emit_reports(reports, format) << '\n';
            return rc;
        }
        const auto report = psolve::run_pipeline(opts);
        std::cout << psolve::emit_report(report, format) << '\n';
        return psolve::exit_code(report);
    } catch (const psolve::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const psolve::ZeroDenominator& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}
