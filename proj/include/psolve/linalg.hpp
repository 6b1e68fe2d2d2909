#pragma once

#include <optional>
#include <vector>

#include "psolve/poly.hpp"
#include "psolve/rational.hpp"

namespace psolve {

/// Solution set of A·u = b: particular + span(nullspace).
struct LinearSolution {
    /// Free variables set to zero.
    std::vector<Rational> particular;
    /// One vector per free variable (that variable 1, other free ones 0).
    std::vector<std::vector<Rational>> nullspace;
};

/// Dense exact system over Q solved by fraction-free row reduction.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    std::size_t unknowns() const { return unknowns_; }
    std::size_t equations() const { return rows_.size(); }

    void add_equation(std::vector<Rational> coefficients, Rational rhs);

    /// std::nullopt when inconsistent.
    std::optional<LinearSolution> solve() const;

private:
    std::size_t unknowns_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
};

/// Gauss-Jordan form of a rational matrix together with the invertible
/// row transform that produced it: transform * A == reduced.
struct Echelon {
    std::vector<std::vector<Rational>> reduced;
    std::vector<std::vector<Rational>> transform;
    /// Column of the pivot in row i, for i < rank.
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon echelon_form(std::vector<std::vector<Rational>> rows, std::size_t cols);

/// Builds the system sum_j u_j·columns[j] == target by matching the
/// coefficient of every monomial that occurs anywhere.
LinearSystem polynomial_identity_system(const std::vector<Poly>& columns, const Poly& target);

/// sum_j weights[j]·basis[j].
Poly combine(const std::vector<Poly>& basis, const std::vector<Rational>& weights);

}  // namespace psolve
