#pragma once

// Shared fixtures and random generators for the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "psolve/darboux.hpp"
#include "psolve/parse.hpp"
#include "psolve/poly.hpp"

namespace testing_support {

using psolve::Poly;
using psolve::Rational;

inline const char* kFirstOde = "dy/dx = (3*x^2*y^2 + x^3 + 1) / (4*(x+1)*(x^2-x+1)*y)";
inline const char* kSecondOde = "dy/dx = y^2 + y*x + x - 1";

inline psolve::VectorField field_of(const std::string& ode) {
    auto spec = psolve::parse_ode(ode);
    return psolve::VectorField(spec.M, spec.N);
}

inline Poly P(const std::string& text) { return psolve::parse_poly(text); }

// Fixed seeds keep failures reproducible.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long coeff(long lo = -9, long hi = 9) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    // Each monomial of degree <= max_degree present with probability 1/2.
    Poly poly(int max_degree = 4) {
        const int d = integer(0, max_degree);
        std::vector<Poly::Term> terms;
        for (auto m : psolve::monomials_up_to(static_cast<std::uint32_t>(d)))
            if (integer(0, 1) == 1) terms.emplace_back(m, Rational(coeff()));
        return Poly::from_terms(std::move(terms));
    }

    Poly nonzero_poly(int max_degree = 4) {
        for (;;) {
            Poly p = poly(max_degree);
            if (!p.is_zero()) return p;
        }
    }

    Rational rational() {
        long den = 0;
        while (den == 0) den = coeff();
        return Rational(coeff(), den);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support
