#pragma once

#include <vector>

#include "psolve/poly.hpp"

namespace psolve {

/// Distinct monic irreducible factors over Q of a polynomial in x alone.
///
/// Rational roots are split off first; what remains is searched with
/// Kronecker's method. If that search exceeds its candidate budget the
/// remaining cofactor is returned whole.
std::vector<Poly> univariate_factors(const Poly& u);

/// Distinct monic irreducible factors over Q of a homogeneous polynomial
/// in x and y, sorted ascending. Empty for constants.
std::vector<Poly> homogeneous_factors(const Poly& h);

}  // namespace psolve
