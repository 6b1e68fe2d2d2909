#pragma once

// Polynomials over Q in the free parameters t_0, t_1, ... that appear
// while eliminating the Darboux block system, and bivariate polynomials
// whose coefficients are such parameter polynomials.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "psolve/poly.hpp"

namespace psolve::detail {

class ParamPoly {
public:
    using Exponents = std::vector<std::uint32_t>;  // no trailing zeros

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    static ParamPoly param(std::size_t index);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const;

    std::set<std::size_t> params() const;
    std::uint32_t degree_in(std::size_t index) const;
    /// Coefficient of t_index^k, free of t_index.
    ParamPoly coefficient_of(std::size_t index, std::uint32_t k) const;
    ParamPoly substitute(std::size_t index, const ParamPoly& value) const;
    /// Requires params() to be a subset of {index}; t_index becomes x.
    Poly as_univariate(std::size_t index) const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }

    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

    const std::map<Exponents, Rational>& terms() const { return terms_; }

private:
    void add_term(Exponents e, const Rational& c);

    std::map<Exponents, Rational> terms_;
};

/// Bivariate polynomial with ParamPoly coefficients.
class ParamBivariate {
public:
    ParamBivariate() = default;
    explicit ParamBivariate(const Poly& p);

    void add_term(Monomial m, const ParamPoly& c);

    ParamBivariate& operator+=(const ParamBivariate& o);
    ParamBivariate& operator-=(const ParamBivariate& o);
    friend ParamBivariate operator-(ParamBivariate a, const ParamBivariate& b) { return a -= b; }
    friend ParamBivariate operator*(const ParamBivariate& a, const ParamBivariate& b);

    ParamBivariate homogeneous_part(std::uint32_t degree) const;
    /// sum_m c_m * op(x^m) for a Q-linear operator on Poly.
    ParamBivariate map_linear(const std::function<Poly(const Poly&)>& op) const;
    ParamBivariate substitute(std::size_t index, const ParamPoly& value) const;
    /// Every parameter must have been eliminated.
    Poly to_poly() const;

    const std::map<Monomial, ParamPoly, std::greater<>>& terms() const { return terms_; }

private:
    std::map<Monomial, ParamPoly, std::greater<>> terms_;
};

}  // namespace psolve::detail
