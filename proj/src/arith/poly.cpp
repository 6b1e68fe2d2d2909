#include "psolve/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace psolve {

namespace {

constexpr auto descending = [](const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; };

// Merges two descending term lists, b scaled by `sign`.
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, int sign) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first > j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first > i->first) {
            out.emplace_back(j->first, sign > 0 ? j->second : -j->second);
            ++j;
        } else {
            Rational c = sign > 0 ? i->second + j->second : i->second - j->second;
            if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

void append_monomial(std::ostringstream& os, Monomial m) {
    bool first = true;
    const auto factor = [&](const char* name, std::uint32_t e) {
        if (e == 0) return;
        if (!first) os << '*';
        os << name;
        if (e > 1) os << '^' << e;
        first = false;
    };
    factor("x", m.dx);
    factor("y", m.dy);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::uint32_t degree) {
    std::vector<Monomial> out;
    out.reserve(degree + 1);
    for (std::uint32_t dx = degree + 1; dx-- > 0;) out.push_back({dx, degree - dx});
    return out;
}

std::vector<Monomial> monomials_up_to(std::uint32_t degree) {
    std::vector<Monomial> out;
    for (std::uint32_t d = degree + 1; d-- > 0;) {
        auto block = monomials_of_degree(d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::monomial(const Rational& c, std::uint32_t dx, std::uint32_t dy) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{dx, dy}, c);
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), descending);
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Poly::degree_in(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(v == Var::x ? m.dx : m.dy));
    return d;
}

Rational Poly::coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Rational{}}, descending);
    return it != terms_.end() && it->first == m ? it->second : Rational{};
}

Poly Poly::homogeneous_part(std::uint32_t degree) const {
    Poly p;
    for (const auto& t : terms_)
        if (t.first.total() == degree) p.terms_.push_back(t);
    return p;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        den_lcm = lcm(den_lcm, c.denominator());
        num_gcd = gcd(num_gcd, c.numerator());
    }
    Rational scale(den_lcm, num_gcd);
    if (leading_coefficient().sign() < 0) scale = -scale;
    return *this * scale;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    terms_ = merge(terms_, o.terms_, +1);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.second *= c;
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly::Term> products;
    products.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
    return Poly::from_terms(std::move(products));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [ma, ca] = a.terms_[i];
        const auto& [mb, cb] = b.terms_[i];
        if (auto c = ma <=> mb; c != 0) return c;
        if (auto c = ca <=> cb; c != 0) return c;
    }
    return a.size() <=> b.size();
}

Rational Poly::eval(const Rational& x0, const Rational& y0) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
        mpq_class xp = 1;
        mpq_class yp = 1;
        for (std::uint32_t i = 0; i < m.dx; ++i) xp *= x0.raw();
        for (std::uint32_t i = 0; i < m.dy; ++i) yp *= y0.raw();
        sum += c * Rational(mpq_class(xp * yp));
    }
    return sum;
}

double Poly::eval(double x0, double y0) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_)
        sum += c.to_double() * std::pow(x0, static_cast<double>(m.dx)) * std::pow(y0, static_cast<double>(m.dy));
    return sum;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.abs();
        if (m.total() == 0) {
            os << mag.to_string();
        } else {
            if (!mag.is_one()) os << mag.to_string() << '*';
            append_monomial(os, m);
        }
    }
    return os.str();
}

Poly add(const Poly& a, const Poly& b) { return a + b; }

Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly pow(const Poly& p, unsigned exponent) {
    Poly result = 1;
    Poly base = p;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

Poly partial(const Poly& p, Var v) {
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = v == Var::x ? m.dx : m.dy;
        if (e == 0) continue;
        Monomial dm = v == Var::x ? Monomial{m.dx - 1, m.dy} : Monomial{m.dx, m.dy - 1};
        out.emplace_back(dm, c * Rational(static_cast<long>(e)));
    }
    // Differentiation can reorder monomials of equal total degree.
    return Poly::from_terms(std::move(out));
}

Rational eval(const Poly& p, const Rational& x0, const Rational& y0) { return p.eval(x0, y0); }

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div by the zero polynomial");
    if (a.is_zero()) return Poly{};
    if (a.degree() < b.degree()) return std::nullopt;
    const Monomial lead = b.leading_monomial();
    const Rational lead_inv = b.leading_coefficient().inverse();
    Poly remainder = a;
    std::vector<Poly::Term> quotient;
    while (!remainder.is_zero()) {
        const Monomial top = remainder.leading_monomial();
        if (!lead.divides(top)) return std::nullopt;
        Poly::Term q{top / lead, remainder.leading_coefficient() * lead_inv};
        remainder -= Poly::monomial(q.second, q.first) * b;
        quotient.push_back(std::move(q));
    }
    return Poly::from_terms(std::move(quotient));
}

}  // namespace psolve
