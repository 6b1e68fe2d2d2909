#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "psolve/execution.hpp"
#include "psolve/poly.hpp"

namespace psolve {

/// The field (N, M) of dy/dx = M/N and its derivation D = N d/dx + M d/dy.
class VectorField {
public:
    /// Throws std::invalid_argument if both are zero or share a
    /// non-constant factor.
    VectorField(Poly M, Poly N);

    const Poly& M() const { return M_; }
    const Poly& N() const { return N_; }

    /// max(deg M, deg N).
    int degree() const { return std::max(M_.degree(), N_.degree()); }

    Poly apply(const Poly& p) const;

private:
    Poly M_;
    Poly N_;
};

Poly apply_D(const VectorField& vf, const Poly& p);

/// An irreducible f with D[f] = g*f.
struct DarbouxPair {
    Poly f;
    Poly g;

    friend bool operator==(const DarbouxPair&, const DarbouxPair&) = default;
    friend auto operator<=>(const DarbouxPair& a, const DarbouxPair& b) { return a.f <=> b.f; }
};

/// D[f]/f when it is a polynomial. Throws std::invalid_argument for constant f.
std::optional<Poly> cofactor(const VectorField& vf, const Poly& f);

/// Monic Darboux polynomials of total degree <= degree_bound reachable by
/// the block search, split against each other by trial division and
/// sorted ascending. Every returned pair satisfies D[f] == g*f.
///
/// `hints` are certified with cofactor() and merged; uncertified hints are
/// dropped.
std::vector<DarbouxPair> find_darboux(const VectorField& vf, int degree_bound,
                                      Execution exec = Execution::parallel,
                                      const std::vector<Poly>& hints = {});

/// Exhaustive oracle: every polynomial supported on monomials of degree
/// <= degree_bound with coefficients from coeff_set, normalized to be
/// monic, kept if it is a Darboux polynomial. Reducible ones are kept.
/// Cost is |coeff_set|^((d+1)(d+2)/2); meant for tests only.
std::vector<DarbouxPair> brute_force_darboux(const VectorField& vf, int degree_bound,
                                             const std::vector<Rational>& coeff_set,
                                             Execution exec = Execution::parallel);

/// Drops every pair whose polynomial is divisible by a lower-degree pair
/// in the same list, replacing it by the quotient.
std::vector<DarbouxPair> split_reducible(const VectorField& vf, std::vector<DarbouxPair> pairs);

}  // namespace psolve
