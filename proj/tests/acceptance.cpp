// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "psolve/pipeline.hpp"
#include "psolve/psengine.hpp"
#include "psolve/verify.hpp"
#include "support.hpp"

using namespace psolve;
using testing_support::field_of;
using testing_support::Gen;
using testing_support::P;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass;
    std::string detail;
};

RunOptions defaults_for(const std::string& ode) {
    RunOptions o;
    o.ode = ode;
    o.include_timings = false;
    return o;
}

Outcome first_sample() {
    const auto t0 = Clock::now();
    const auto report = run_pipeline(defaults_for(testing_support::kFirstOde));
    const double secs = seconds_since(t0);
    if (report.elementary.status != BranchStatus::found) return {false, "elementary branch found nothing"};
    const auto& fs = report.elementary.factor->factors;
    const bool shape = fs.size() == 2 && fs[0].p == P("x+1") && fs[1].p == P("x^2-x+1") &&
                       fs[0].exponent == Rational(-3, 2) && fs[1].exponent == Rational(-3, 2) &&
                       report.elementary.factor->r0.is_zero();
    const bool product = fs.size() == 2 && mul(fs[0].p, fs[1].p) == P("x^3+1");
    char buf[160];
    std::snprintf(buf, sizeof buf, "R = %s, %.3f s (limit 5 s)", report.elementary.factor->to_string().c_str(), secs);
    return {shape && product && secs < 5.0, buf};
}

Outcome second_sample() {
    const auto t0 = Clock::now();
    const auto report = run_pipeline(defaults_for(testing_support::kSecondOde));
    const double secs = seconds_since(t0);
    if (report.elementary.status != BranchStatus::no_solution) return {false, "elementary branch did not report no_solution"};
    if (report.liouvillian.status != BranchStatus::found) return {false, "Liouvillian branch found nothing"};
    const auto& R = *report.liouvillian.factor;
    const bool ok = R.r0 == RationalFunction(P("1/2*x^2 - 2*x")) && R.factors.size() == 1 &&
                    R.factors[0].p == P("y+1") && R.factors[0].exponent == Rational(-2);
    char buf[160];
    std::snprintf(buf, sizeof buf, "R = %s, %.3f s (limit 10 s)", R.to_string().c_str(), secs);
    return {ok && secs < 10.0, buf};
}

Outcome symbolic_identities() {
    int checked = 0;
    for (const auto& ode : read_fixtures(PSOLVE_FIXTURES)) {
        RunOptions o = defaults_for(ode);
        o.force_liouvillian = true;
        const auto report = run_pipeline(o);
        const auto vf = field_of(ode);
        for (const auto* branch : {&report.elementary, &report.liouvillian}) {
            if (!branch->factor) continue;
            const auto v = verify_symbolic(vf, *branch->factor);
            if (!v.difference.is_zero() || !v.passed) return {false, ode + ": nonzero difference " + v.difference.to_string()};
            if (!derivative_of_exponent(vf, branch->factor->r0)) return {false, ode + ": D[r0] not a polynomial"};
            ++checked;
        }
    }
    return {checked > 0, std::to_string(checked) + " solver results, all differences exactly 0"};
}

Outcome oracle_equivalence() {
    const auto t0 = Clock::now();
    const std::vector<Rational> grid{-2, -1, 0, 1, 2};
    const auto in_grid = [](const Poly& f) {
        const Poly p = f.primitive();
        return std::all_of(p.terms().begin(), p.terms().end(),
                           [](const auto& t) { return t.second.abs() <= Rational(2); });
    };
    std::string detail;
    for (const char* ode : {testing_support::kFirstOde, testing_support::kSecondOde}) {
        const auto vf = field_of(ode);
        for (int bound = 1; bound <= 2; ++bound) {
            const auto brute = brute_force_darboux(vf, bound, grid);
            std::vector<Poly> brute_irreducible;
            for (const auto& b : brute) {
                const bool reducible = std::any_of(brute.begin(), brute.end(), [&](const DarbouxPair& o) {
                    return o.f.degree() < b.f.degree() && exact_div(b.f, o.f).has_value();
                });
                if (!reducible) brute_irreducible.push_back(b.f);
            }
            std::vector<Poly> found;
            for (const auto& p : find_darboux(vf, bound))
                if (in_grid(p.f)) found.push_back(p.f);
            std::sort(brute_irreducible.begin(), brute_irreducible.end());
            std::sort(found.begin(), found.end());
            if (brute_irreducible != found)
                return {false, std::string(ode) + " bound " + std::to_string(bound) + ": search and oracle differ"};
            detail += std::to_string(found.size()) + " ";
        }
    }
    const double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "matching sets of sizes %s, %.3f s (limit 60 s)", detail.c_str(), secs);
    return {secs < 60.0, buf};
}

Outcome numeric_crosscheck() {
    const auto v5 = field_of(testing_support::kFirstOde);
    const auto v6 = field_of(testing_support::kSecondOde);
    IntegratingFactor R5;
    for (const char* f : {"x+1", "x^2-x+1"}) R5.factors.push_back({P(f), *cofactor(v5, P(f)), Rational(-3, 2)});
    IntegratingFactor R6;
    R6.r0 = P("1/2*x^2 - 2*x");
    R6.factors.push_back({P("y+1"), *cofactor(v6, P("y+1")), Rational(-2)});
    NumericCheckConfig c5;
    c5.x_start = 1;
    c5.y_start = 1;
    c5.x_end = 2;
    const NumericCheckConfig c6;

    std::string detail;
    bool ok = true;
    for (int which = 0; which < 2; ++which) {
        const auto& vf = which == 0 ? v5 : v6;
        const auto& R = which == 0 ? R5 : R6;
        NumericCheckConfig cfg = which == 0 ? c5 : c6;
        const double drift = numeric_drift(vf, R, cfg);
        ok = ok && drift < 1e-6;
        cfg.step = Rational(1, 8);
        double prev = numeric_drift(vf, R, cfg);
        double worst = 1e300;
        while (prev >= 1e-12) {
            cfg.step = cfg.step / Rational(2);
            const double next = numeric_drift(vf, R, cfg);
            worst = std::min(worst, prev / next);
            prev = next;
        }
        ok = ok && worst >= 8.0;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%sdrift %.2e at h=1e-3, min halving ratio %.1f", which == 0 ? "" : "; ",
                      drift, worst);
        detail += buf;
    }
    return {ok, detail};
}

Outcome property_suites() {
    constexpr int kCases = 1000;
    int failures = 0;
    Gen gen(20240601);
    for (int i = 0; i < kCases; ++i) {
        const Poly a = gen.poly(), b = gen.poly(), c = gen.poly();
        const bool ring = a + b == b + a && (a + b) + c == a + (b + c) && a * b == b * a &&
                          (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a + Poly{} == a &&
                          a * Poly(1) == a && (a - a).is_zero();
        failures += ring ? 0 : 1;
    }
    for (int done = 0; done < kCases;) {
        std::optional<VectorField> vf;
        try {
            vf.emplace(gen.nonzero_poly(), gen.nonzero_poly());
        } catch (const std::invalid_argument&) {
            continue;
        }
        const Poly p = gen.poly(), q = gen.poly();
        failures += apply_D(*vf, p * q) == p * apply_D(*vf, q) + q * apply_D(*vf, p) ? 0 : 1;
        ++done;
    }
    for (int i = 0; i < kCases; ++i) {
        const Poly a = gen.poly(), b = gen.nonzero_poly();
        const auto q = exact_div(mul(a, b), b);
        failures += q && *q == a ? 0 : 1;
    }
    for (int i = 0; i < kCases; ++i) {
        Poly p = gen.poly();
        if (i % 3 == 0) p = p * gen.rational();
        failures += parse_poly(p.to_string()) == p ? 0 : 1;
    }
    return {failures == 0, "4 suites x " + std::to_string(kCases) + " cases, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 first sample, elementary factors", first_sample},
        {"2 second sample, Liouvillian factor", second_sample},
        {"3 symbolic identity on fixture corpus", symbolic_identities},
        {"4 search agrees with brute-force oracle", oracle_equivalence},
        {"5 numeric drift and RK4 convergence", numeric_crosscheck},
        {"6 property suites", property_suites},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o{false, ""};
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
