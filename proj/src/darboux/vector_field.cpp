#include <stdexcept>

#include "psolve/darboux.hpp"

namespace psolve {

VectorField::VectorField(Poly M, Poly N) : M_(std::move(M)), N_(std::move(N)) {
    if (M_.is_zero() && N_.is_zero()) throw std::invalid_argument("vector field with M = N = 0");
    if (!gcd(M_, N_).is_constant()) throw std::invalid_argument("M and N share a non-constant factor");
}

Poly VectorField::apply(const Poly& p) const { return N_ * partial(p, Var::x) + M_ * partial(p, Var::y); }

Poly apply_D(const VectorField& vf, const Poly& p) { return vf.apply(p); }

std::optional<Poly> cofactor(const VectorField& vf, const Poly& f) {
    if (f.is_constant()) throw std::invalid_argument("cofactor of a constant polynomial");
    return exact_div(vf.apply(f), f);
}

}  // namespace psolve
