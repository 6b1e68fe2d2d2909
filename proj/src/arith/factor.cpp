#include "psolve/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace psolve {

namespace {

constexpr std::size_t kKroneckerBudget = 200000;
const mpz_class kDivisorLimit("1000000000000");

// Positive divisors of |n|; empty when n is zero or too large to enumerate.
std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    if (n == 0 || n > kDivisorLimit) return {};
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Poly x_linear(const Rational& root) { return Poly::x() - Poly(root); }

Rational integer_point(std::size_t i) {
    // 0, 1, -1, 2, -2, ...
    const long k = static_cast<long>((i + 1) / 2);
    return i % 2 == 1 ? Rational(k) : Rational(-k);
}

// Lagrange interpolation through (xs[i], vs[i]) in x.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& vs) {
    Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = 1;
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= x_linear(xs[j]);
            denom *= xs[i] - xs[j];
        }
        result += basis * (vs[i] / denom);
    }
    return result;
}

bool has_integer_coefficients(const Poly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const Poly::Term& t) { return t.second.is_integer(); });
}

// Smallest-degree proper factor of a primitive square-free w without
// rational roots, or std::nullopt if none exists (or the budget ran out).
std::optional<Poly> kronecker_factor(const Poly& w) {
    const int n = w.degree();
    for (int k = 2; k <= n / 2; ++k) {
        std::vector<Rational> xs;
        std::vector<std::vector<mpz_class>> choices;
        std::size_t combos = 1;
        for (std::size_t i = 0; xs.size() < static_cast<std::size_t>(k) + 1; ++i) {
            const Rational t = integer_point(i);
            const Rational v = w.eval(t, 0);
            if (v.is_zero()) continue;
            auto ds = divisors(v.numerator());
            if (ds.empty()) return std::nullopt;
            if (!xs.empty()) {
                const std::size_t m = ds.size();
                for (std::size_t j = 0; j < m; ++j) ds.push_back(-ds[j]);
            }
            combos *= ds.size();
            if (combos > kKroneckerBudget) return std::nullopt;
            xs.push_back(t);
            choices.push_back(std::move(ds));
        }
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            std::vector<Rational> vs;
            for (std::size_t i = 0; i < choices.size(); ++i) vs.emplace_back(choices[i][idx[i]]);
            Poly cand = interpolate(xs, vs);
            if (cand.degree() == k && has_integer_coefficients(cand) && exact_div(w, cand)) return cand.monic();
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Poly> univariate_factors(const Poly& u) {
    if (u.degree_in(Var::y) > 0) throw std::invalid_argument("univariate_factors expects a polynomial in x");
    if (u.is_constant()) return {};
    Poly work = exact_div(u, gcd(u, partial(u, Var::x)))->primitive();

    std::vector<Poly> factors;
    if (work.constant_term().is_zero()) {
        factors.push_back(Poly::x());
        work = exact_div(work, Poly::x())->primitive();
    }
    if (work.degree() >= 1) {
        const auto ps = divisors(work.constant_term().numerator());
        const auto qs = divisors(work.leading_coefficient().numerator());
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int s : {1, -1}) {
                    if (work.degree() < 1) break;
                    const Rational root(mpz_class(s * p), q);
                    if (!work.eval(root, 0).is_zero()) continue;
                    factors.push_back(x_linear(root));
                    work = exact_div(work, x_linear(root))->primitive();
                }
            }
        }
    }
    while (work.degree() >= 4) {
        auto f = kronecker_factor(work);
        if (!f) break;
        factors.push_back(*f);
        work = exact_div(work, *f)->primitive();
    }
    if (work.degree() >= 1) factors.push_back(work.monic());
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<Poly> homogeneous_factors(const Poly& h) {
    if (h.is_constant()) return {};
    const auto n = static_cast<std::uint32_t>(h.degree());
    std::uint32_t min_dx = n;
    std::uint32_t min_dy = n;
    for (const auto& [m, c] : h.terms()) {
        if (m.total() != n) throw std::invalid_argument("homogeneous_factors expects a homogeneous polynomial");
        min_dx = std::min(min_dx, m.dx);
        min_dy = std::min(min_dy, m.dy);
    }
    std::vector<Poly> factors;
    if (min_dx > 0) factors.push_back(Poly::x());
    if (min_dy > 0) factors.push_back(Poly::y());

    // Dehomogenize at y = 1 after stripping the axis factors.
    std::vector<Poly::Term> dehom;
    for (const auto& [m, c] : h.terms()) dehom.emplace_back(Monomial{m.dx - min_dx, 0}, c);
    for (const Poly& v : univariate_factors(Poly::from_terms(std::move(dehom)))) {
        const auto e = static_cast<std::uint32_t>(v.degree());
        std::vector<Poly::Term> hom;
        for (const auto& [m, c] : v.terms()) hom.emplace_back(Monomial{m.dx, e - m.dx}, c);
        factors.push_back(Poly::from_terms(std::move(hom)).monic());
    }
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    return factors;
}

}  // namespace psolve
