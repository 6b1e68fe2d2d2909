#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psolve/darboux.hpp"
#include "psolve/execution.hpp"
#include "psolve/rational_function.hpp"

namespace psolve {

/// One factor p^c of an integrating factor, with p's cofactor D[p]/p.
struct PowerFactor {
    Poly p;
    Poly cofactor;
    Rational exponent;

    friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

/// R = exp(r0) * prod p_i^c_i, kept in this structural form.
///
/// r0 is reduced, and normalized so that its numerator has no component
/// along its denominator's leading monomial (for polynomial r0: zero
/// constant term). R is only defined up to a constant factor.
struct IntegratingFactor {
    RationalFunction r0;
    std::vector<PowerFactor> factors;

    bool is_one() const { return r0.is_zero() && factors.empty(); }
    /// e.g. "exp(1/2*x^2 - 2*x) * (y + 1)^(-2)"; "1" for the trivial factor.
    std::string to_string() const;

    friend bool operator==(const IntegratingFactor&, const IntegratingFactor&) = default;
};

/// -(dN/dx + dM/dy): what D[R]/R must equal.
struct Residual {
    Poly value;
};

Residual residual(const VectorField& vf);

/// Rational n_i with sum n_i*g_i == residual. Free unknowns are set to
/// zero; zero exponents are dropped. std::nullopt when inconsistent.
std::optional<IntegratingFactor> solve_elementary(const VectorField& vf, const std::vector<DarbouxPair>& pairs);

/// Candidate denominator with its exponent vector over `pairs`.
struct Denominator {
    Poly q;
    std::vector<unsigned> powers;
};

/// All prod p_i^k_i with 0 <= k_i <= mult_bound, ascending by total degree
/// then monomial order; the first entry is 1.
std::vector<Denominator> denominator_candidates(const std::vector<DarbouxPair>& pairs, int mult_bound);
std::vector<Poly> enumerate_denominators(const std::vector<DarbouxPair>& pairs, int mult_bound);

/// Searches r0 = P/Q with Q from denominator_candidates() and
/// deg P <= num_degree_bound, together with the exponents c_i, so that
///   D[P] - P*(D[Q]/Q) == Q*(residual - sum c_i*g_i).
/// That identity makes D[r0] the polynomial residual - sum c_i*g_i. The
/// first consistent Q in enumeration order wins.
std::optional<IntegratingFactor> solve_liouvillian(const VectorField& vf, const std::vector<DarbouxPair>& pairs,
                                                   int num_degree_bound, int mult_bound,
                                                   Execution exec = Execution::parallel);

/// D[r0] as a polynomial, or std::nullopt when Q^2 does not divide
/// Q*D[P] - P*D[Q].
std::optional<Poly> derivative_of_exponent(const VectorField& vf, const RationalFunction& r0);

}  // namespace psolve
