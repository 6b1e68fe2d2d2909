#include "psolve/psengine.hpp"

#include <algorithm>
#include <stdexcept>

#include "psolve/linalg.hpp"

namespace psolve {

namespace {

std::string render_factor(const PowerFactor& f) {
    std::string s = "(" + f.p.to_string() + ")";
    if (!f.exponent.is_one()) s += "^(" + f.exponent.to_string() + ")";
    return s;
}

// Shifts r0 by a constant so the numerator's coefficient at the
// denominator's leading monomial is zero.
RationalFunction normalize_exponent(const Poly& num, const Poly& den) {
    RationalFunction r = rf_reduce(num, den);
    if (r.is_zero()) return r;
    const Rational shift = r.num().coefficient(r.den().leading_monomial());
    if (shift.is_zero()) return r;
    return rf_reduce(r.num() - r.den() * shift, r.den());
}

std::vector<PowerFactor> nonzero_factors(const std::vector<DarbouxPair>& pairs, const std::vector<Rational>& exps,
                                         std::size_t offset) {
    std::vector<PowerFactor> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Rational& c = exps[offset + i];
        if (!c.is_zero()) out.push_back({pairs[i].f, pairs[i].g, c});
    }
    return out;
}

std::optional<IntegratingFactor> solve_for_denominator(const VectorField& vf, const std::vector<DarbouxPair>& pairs,
                                                       const Denominator& den, const Poly& res, int num_degree_bound) {
    Poly log_der_q;  // D[Q]/Q
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (den.powers[i] != 0) log_der_q += pairs[i].g * Rational(static_cast<long>(den.powers[i]));

    std::vector<Poly> numerator_basis;
    std::vector<Poly> columns;
    for (const auto& mu : monomials_up_to(static_cast<std::uint32_t>(num_degree_bound))) {
        Poly p = Poly::monomial(1, mu);
        columns.push_back(vf.apply(p) - log_der_q * p);
        numerator_basis.push_back(std::move(p));
    }
    for (const auto& pair : pairs) columns.push_back(den.q * pair.g);

    auto sol = polynomial_identity_system(columns, den.q * res).solve();
    if (!sol) return std::nullopt;
    const std::vector<Rational> num_coeffs(sol->particular.begin(),
                                           sol->particular.begin() + static_cast<long>(numerator_basis.size()));
    IntegratingFactor result;
    result.r0 = normalize_exponent(combine(numerator_basis, num_coeffs), den.q);
    result.factors = nonzero_factors(pairs, sol->particular, numerator_basis.size());
    return result;
}

}  // namespace

std::string IntegratingFactor::to_string() const {
    std::vector<std::string> parts;
    if (!r0.is_zero()) parts.push_back("exp(" + r0.to_string() + ")");
    for (const auto& f : factors) parts.push_back(render_factor(f));
    if (parts.empty()) return "1";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " * " + parts[i];
    return s;
}

Residual residual(const VectorField& vf) { return {-(partial(vf.N(), Var::x) + partial(vf.M(), Var::y))}; }

std::optional<IntegratingFactor> solve_elementary(const VectorField& vf, const std::vector<DarbouxPair>& pairs) {
    std::vector<Poly> columns;
    for (const auto& pair : pairs) columns.push_back(pair.g);
    auto sol = polynomial_identity_system(columns, residual(vf).value).solve();
    if (!sol) return std::nullopt;
    IntegratingFactor result;
    result.factors = nonzero_factors(pairs, sol->particular, 0);
    return result;
}

std::vector<Denominator> denominator_candidates(const std::vector<DarbouxPair>& pairs, int mult_bound) {
    if (mult_bound < 0) throw std::invalid_argument("multiplicity bound must be non-negative");
    std::vector<Denominator> out{{Poly(1), std::vector<unsigned>(pairs.size(), 0)}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::size_t n = out.size();
        for (std::size_t j = 0; j < n; ++j) {
            Denominator d = out[j];
            for (int k = 1; k <= mult_bound; ++k) {
                d.q *= pairs[i].f;
                d.powers[i] = static_cast<unsigned>(k);
                out.push_back(d);
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Denominator& a, const Denominator& b) {
        if (a.q.degree() != b.q.degree()) return a.q.degree() < b.q.degree();
        return a.q < b.q;
    });
    return out;
}

std::vector<Poly> enumerate_denominators(const std::vector<DarbouxPair>& pairs, int mult_bound) {
    std::vector<Poly> out;
    for (auto& d : denominator_candidates(pairs, mult_bound)) out.push_back(std::move(d.q));
    return out;
}

std::optional<IntegratingFactor> solve_liouvillian(const VectorField& vf, const std::vector<DarbouxPair>& pairs,
                                                   int num_degree_bound, int mult_bound, Execution exec) {
    if (num_degree_bound < 0) throw std::invalid_argument("numerator degree bound must be non-negative");
    const Poly res = residual(vf).value;
    if (res.is_zero()) return IntegratingFactor{};

    const auto dens = denominator_candidates(pairs, mult_bound);
    std::vector<std::optional<IntegratingFactor>> results(dens.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < static_cast<long>(dens.size()); ++i)
            results[static_cast<std::size_t>(i)] = solve_for_denominator(vf, pairs, dens[static_cast<std::size_t>(i)],
                                                                         res, num_degree_bound);
    } else {
        for (std::size_t i = 0; i < dens.size(); ++i) {
            results[i] = solve_for_denominator(vf, pairs, dens[i], res, num_degree_bound);
            if (results[i]) break;
        }
    }
    for (auto& r : results)
        if (r) return std::move(r);
    return std::nullopt;
}

std::optional<Poly> derivative_of_exponent(const VectorField& vf, const RationalFunction& r0) {
    const Poly& P = r0.num();
    const Poly& Q = r0.den();
    return exact_div(Q * vf.apply(P) - P * vf.apply(Q), Q * Q);
}

}  // namespace psolve
