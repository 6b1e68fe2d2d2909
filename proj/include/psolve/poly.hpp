#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "psolve/rational.hpp"

namespace psolve {

enum class Var { x, y };

/// x^dx * y^dy. Ordered graded-lexicographically with x > y.
struct Monomial {
    std::uint32_t dx = 0;
    std::uint32_t dy = 0;

    constexpr std::uint32_t total() const { return dx + dy; }
    constexpr bool divides(const Monomial& o) const { return dx <= o.dx && dy <= o.dy; }

    friend constexpr Monomial operator*(Monomial a, Monomial b) { return {a.dx + b.dx, a.dy + b.dy}; }
    /// Requires b.divides(a).
    friend constexpr Monomial operator/(Monomial a, Monomial b) { return {a.dx - b.dx, a.dy - b.dy}; }

    friend constexpr bool operator==(Monomial, Monomial) = default;
    friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
        if (auto c = a.total() <=> b.total(); c != 0) return c;
        return a.dx <=> b.dx;
    }
};

/// All monomials of total degree exactly `degree`, in descending order.
std::vector<Monomial> monomials_of_degree(std::uint32_t degree);
/// All monomials of total degree <= `degree`, in descending order.
std::vector<Monomial> monomials_up_to(std::uint32_t degree);

/// Sparse bivariate polynomial over Q.
///
/// Terms are stored in strictly descending monomial order with no zero
/// coefficients, so equal polynomials have identical representations.
class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static Poly x() { return monomial(1, 1, 0); }
    static Poly y() { return monomial(1, 0, 1); }
    static Poly monomial(const Rational& c, std::uint32_t dx, std::uint32_t dy);
    static Poly monomial(const Rational& c, Monomial m) { return monomial(c, m.dx, m.dy); }
    /// Sorts, merges like terms and drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.total()); }
    int degree_in(Var v) const;

    /// Precondition: non-zero.
    const Monomial& leading_monomial() const { return terms_.front().first; }
    const Rational& leading_coefficient() const { return terms_.front().second; }
    Rational coefficient(Monomial m) const;
    Rational constant_term() const { return coefficient({0, 0}); }

    Poly homogeneous_part(std::uint32_t degree) const;

    /// Scaled so the leading coefficient is 1; zero stays zero.
    Poly monic() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    Poly primitive() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    /// Total order extending the monomial order: compares term sequences
    /// from the leading term down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    Rational eval(const Rational& x0, const Rational& y0) const;
    double eval(double x0, double y0) const;

    /// Canonical text, e.g. "3*x^2*y^2 + x^3 + 1".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    std::vector<Term> terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned exponent);
Poly partial(const Poly& p, Var v);
Rational eval(const Poly& p, const Rational& x0, const Rational& y0);

/// q with a == q*b if b divides a, std::nullopt otherwise.
/// Throws std::domain_error when b is zero.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);

/// Monic greatest common divisor. gcd(a, 0) is monic(a).
/// Throws std::domain_error when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace psolve
