#include "psolve/verify.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace psolve {

namespace {

// 5-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kGaussNodes{-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                            0.9061798459386640};
constexpr std::array<double, 5> kGaussWeights{0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                              0.4786286704993665, 0.2369268850561891};
constexpr int kChordPanels = 200;

class PathChecker {
public:
    PathChecker(const VectorField& vf, const IntegratingFactor& R, double threshold)
        : vf_(vf), R_(R), threshold_(threshold) {}

    void check(double x, double y) const {
        if (!std::isfinite(x) || !std::isfinite(y)) throw NonFinite(where("non-finite point", x, y));
        if (std::abs(vf_.N().eval(x, y)) < threshold_) throw Singularity(where("N vanishes", x, y));
        for (const auto& f : R_.factors)
            if (std::abs(f.p.eval(x, y)) < threshold_) throw Singularity(where(f.p.to_string() + " vanishes", x, y));
        if (!R_.r0.is_polynomial() && std::abs(R_.r0.den().eval(x, y)) < threshold_)
            throw Singularity(where("denominator of r0 vanishes", x, y));
    }

    double slope(double x, double y) const {
        check(x, y);
        return vf_.M().eval(x, y) / vf_.N().eval(x, y);
    }

private:
    static std::string where(const std::string& what, double x, double y) {
        std::ostringstream os;
        os << what << " at (" << x << ", " << y << ")";
        return os.str();
    }

    const VectorField& vf_;
    const IntegratingFactor& R_;
    double threshold_;
};

}  // namespace

VerifyReport verify_symbolic(const VectorField& vf, const IntegratingFactor& R) {
    VerifyReport report;
    Poly total;
    if (auto dr0 = derivative_of_exponent(vf, R.r0)) {
        report.exponent_derivative_polynomial = true;
        total += *dr0;
    }
    report.factors_darboux = true;
    for (const auto& f : R.factors) {
        auto g = f.p.is_constant() ? std::nullopt : cofactor(vf, f.p);
        if (!g) {
            report.factors_darboux = false;
            continue;
        }
        total += *g * f.exponent;
    }
    report.difference = residual(vf).value - total;
    report.passed = report.exponent_derivative_polynomial && report.factors_darboux && report.difference.is_zero();
    return report;
}

double evaluate_factor(const IntegratingFactor& R, double x, double y) {
    double log_r = R.r0.is_zero() ? 0.0 : R.r0.eval(x, y);
    for (const auto& f : R.factors) log_r += f.exponent.to_double() * std::log(std::abs(f.p.eval(x, y)));
    return std::exp(log_r);
}

double numeric_drift(const VectorField& vf, const IntegratingFactor& R, const NumericCheckConfig& cfg) {
    if (cfg.step.sign() <= 0) throw std::invalid_argument("step must be positive");
    if (cfg.x_start == cfg.x_end) throw std::invalid_argument("x_start must differ from x_end");

    const PathChecker path(vf, R, cfg.singularity_threshold);
    const double x0 = cfg.x_start.to_double();
    const double y0 = cfg.y_start.to_double();
    const double x1 = cfg.x_end.to_double();
    const Rational span = (cfg.x_end - cfg.x_start).abs();
    const auto steps = static_cast<long>(std::ceil((span / cfg.step).to_double() - 1e-9));
    const double h = (x1 - x0) / static_cast<double>(steps);

    double x = x0;
    double y = y0;
    for (long i = 0; i < steps; ++i) {
        const double k1 = path.slope(x, y);
        const double k2 = path.slope(x + h / 2, y + h / 2 * k1);
        const double k3 = path.slope(x + h / 2, y + h / 2 * k2);
        const double k4 = path.slope(x + h, y + h * k3);
        y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        x = x0 + static_cast<double>(i + 1) * h;
        if (!std::isfinite(y)) throw NonFinite("trajectory diverged");
    }
    path.check(x1, y);

    // Line integral of R*(M dx - N dy) from (x0, y0) to (x1, y).
    const double dx = x1 - x0;
    const double dy = y - y0;
    double integral = 0.0;
    for (int panel = 0; panel < kChordPanels; ++panel) {
        const double a = static_cast<double>(panel) / kChordPanels;
        const double half = 0.5 / kChordPanels;
        for (std::size_t k = 0; k < kGaussNodes.size(); ++k) {
            const double t = a + half * (1.0 + kGaussNodes[k]);
            const double px = x0 + t * dx;
            const double py = y0 + t * dy;
            path.check(px, py);
            const double form = vf.M().eval(px, py) * dx - vf.N().eval(px, py) * dy;
            integral += kGaussWeights[k] * half * evaluate_factor(R, px, py) * form;
        }
    }
    const double drift = std::abs(cfg.scale * integral);
    if (!std::isfinite(drift)) throw NonFinite("drift is not finite");
    return drift;
}

double finite_diff_D(const VectorField& vf, const Poly& p, double x, double y, double h) {
    if (!(h > 0)) throw std::invalid_argument("finite difference step must be positive");
    const double px = (p.eval(x + h, y) - p.eval(x - h, y)) / (2 * h);
    const double py = (p.eval(x, y + h) - p.eval(x, y - h)) / (2 * h);
    return vf.N().eval(x, y) * px + vf.M().eval(x, y) * py;
}

}  // namespace psolve
