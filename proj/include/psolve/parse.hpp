#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psolve/poly.hpp"

namespace psolve {

/// Syntax error at a byte offset of the input, with the set of tokens
/// that would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail);

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

class ZeroDenominator : public std::runtime_error {
public:
    ZeroDenominator() : std::runtime_error("right-hand side has a zero denominator") {}
};

/// dy/dx = M/N with gcd(M, N) constant.
struct OdeSpec {
    Poly M;
    Poly N;
    std::string source_text;
    /// Set when a non-constant common factor of M and N was divided out.
    bool common_factor_removed = false;
};

/// Grammar (whitespace is insignificant except inside rational literals):
///
///   expr    := term (("+" | "-") term)*
///   term    := unary ("*" unary)*
///   unary   := "-" unary | power
///   power   := primary ("^" integer)?
///   primary := integer | integer "/" integer | "x" | "y" | "(" expr ")"
///
/// Rational literals are written without spaces ("3/4"). Implicit
/// multiplication is rejected.
Poly parse_poly(std::string_view text);

/// Accepts "dy/dx = <expr>" or "dy/dx = <expr> / <expr>".
OdeSpec parse_ode(std::string_view text);

}  // namespace psolve
