#pragma once

#include <string>

#include "psolve/poly.hpp"

namespace psolve {

/// Reduced quotient num/den: gcd(num, den) is constant and den is monic.
class RationalFunction {
public:
    /// The zero function 0/1.
    RationalFunction() : den_(1) {}
    RationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    double eval(double x0, double y0) const { return num_.eval(x0, y0) / den_.eval(x0, y0); }

    /// "P" when the denominator is 1, "(P)/(Q)" otherwise.
    std::string to_string() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    friend RationalFunction rf_reduce(const Poly& num, const Poly& den);
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// Divides out gcd(num, den) and makes the denominator monic.
/// Throws std::domain_error for a zero denominator.
RationalFunction rf_reduce(const Poly& num, const Poly& den);

}  // namespace psolve
