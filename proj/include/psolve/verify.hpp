#pragma once

#include <stdexcept>
#include <string>

#include "psolve/psengine.hpp"

namespace psolve {

struct VerifyReport {
    bool passed = false;
    /// Q^2 divides Q*D[P] - P*D[Q], i.e. D[r0] is a polynomial.
    bool exponent_derivative_polynomial = false;
    /// Every p_i divides D[p_i].
    bool factors_darboux = false;
    /// residual - (D[r0] + sum c_i * D[p_i]/p_i); zero on success.
    Poly difference;
};

/// Recomputes every cofactor and D[r0] from scratch and checks the
/// log-derivative identity exactly.
VerifyReport verify_symbolic(const VectorField& vf, const IntegratingFactor& R);

class NumericError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The path came too close to a zero of N or of some p_i.
class Singularity : public NumericError {
    using NumericError::NumericError;
};

class NonFinite : public NumericError {
    using NumericError::NumericError;
};

struct NumericCheckConfig {
    Rational x_start = 0;
    Rational y_start = 0;
    Rational x_end = 1;
    Rational step = Rational(1, 1000);
    double drift_tolerance = 1e-6;
    /// Constant multiplier applied to R.
    double scale = 1.0;
    /// |N| and |p_i| below this count as a singularity.
    double singularity_threshold = 1e-9;
};

/// Integrates dy/dx = M/N with classical RK4 from (x_start, y_start) to
/// x_end, then returns |I(end) - I(start)| for the first integral
/// dI = R*(M dx - N dy), obtained by Gauss-Legendre quadrature of the
/// 1-form along the straight chord joining the two trajectory endpoints.
/// For a true integrating factor this is only the RK4 error, O(step^4).
///
/// Throws Singularity or NonFinite.
double numeric_drift(const VectorField& vf, const IntegratingFactor& R, const NumericCheckConfig& cfg);

/// R at a point, computed as exp(r0 + sum c_i*log|p_i|).
double evaluate_factor(const IntegratingFactor& R, double x, double y);

/// Central-difference estimate of D[p] at (x, y).
double finite_diff_D(const VectorField& vf, const Poly& p, double x, double y, double h);

}  // namespace psolve
