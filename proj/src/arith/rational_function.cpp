#include "psolve/rational_function.hpp"

#include <stdexcept>

namespace psolve {

RationalFunction rf_reduce(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return {};
    const Poly g = gcd(num, den);
    Poly p = *exact_div(num, g);
    Poly q = *exact_div(den, g);
    const Rational scale = q.leading_coefficient().inverse();
    return {p * scale, q * scale};
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace psolve
