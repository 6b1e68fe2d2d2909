// Bivariate gcd over Q: primitive polynomial remainder sequence in Q[y][x]
// with contents taken in Q[y].

#include <stdexcept>

#include "psolve/poly.hpp"

namespace psolve {

namespace {

// Coefficient of x^k as a polynomial in y.
Poly x_coefficient(const Poly& p, std::uint32_t k) {
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : p.terms())
        if (m.dx == k) out.emplace_back(Monomial{0, m.dy}, c);
    return Poly::from_terms(std::move(out));
}

Poly leading_x_coefficient(const Poly& p) { return x_coefficient(p, static_cast<std::uint32_t>(p.degree_in(Var::x))); }

// Remainder of univariate division in y.
Poly y_remainder(Poly a, const Poly& b) {
    const int db = b.degree();
    const Rational lead_inv = b.leading_coefficient().inverse();
    while (!a.is_zero() && a.degree() >= db) {
        const auto k = static_cast<std::uint32_t>(a.degree() - db);
        a -= Poly::monomial(a.leading_coefficient() * lead_inv, 0, k) * b;
    }
    return a;
}

Poly y_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = y_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly x_content(const Poly& p) {
    Poly g;
    const int dx = p.degree_in(Var::x);
    for (int k = 0; k <= dx; ++k) {
        Poly c = x_coefficient(p, static_cast<std::uint32_t>(k));
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : y_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Poly x_primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    auto q = exact_div(p, x_content(p));
    if (!q) throw std::logic_error("content does not divide polynomial");
    return q->primitive();
}

// Pseudo-remainder of a by b with respect to x.
Poly x_pseudo_remainder(Poly a, const Poly& b) {
    const int db = b.degree_in(Var::x);
    const Poly lb = leading_x_coefficient(b);
    while (!a.is_zero() && a.degree_in(Var::x) >= db) {
        const auto k = static_cast<std::uint32_t>(a.degree_in(Var::x) - db);
        a = lb * a - leading_x_coefficient(a) * Poly::monomial(1, k, 0) * b;
    }
    return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return 1;

    const Poly content = y_gcd(x_content(a), x_content(b));
    Poly u = x_primitive_part(a);
    Poly v = x_primitive_part(b);
    if (u.degree_in(Var::x) < v.degree_in(Var::x)) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = x_pseudo_remainder(u, v);
        u = std::move(v);
        v = x_primitive_part(r);
    }
    Poly g = (content * u).monic();
    if (!exact_div(a, g) || !exact_div(b, g)) throw std::logic_error("gcd certification failed");
    return g;
}

}  // namespace psolve
