#include "param_poly.hpp"

#include <stdexcept>

namespace psolve::detail {

namespace {

ParamPoly::Exponents trimmed(ParamPoly::Exponents e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

ParamPoly::Exponents product(const ParamPoly::Exponents& a, const ParamPoly::Exponents& b) {
    ParamPoly::Exponents out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

}  // namespace

ParamPoly::ParamPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

ParamPoly ParamPoly::param(std::size_t index) {
    Exponents e(index + 1, 0);
    e[index] = 1;
    ParamPoly p;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Rational ParamPoly::constant_value() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational{} : it->second;
}

std::set<std::size_t> ParamPoly::params() const {
    std::set<std::size_t> out;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) out.insert(i);
    return out;
}

std::uint32_t ParamPoly::degree_in(std::size_t index) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        if (index < e.size()) d = std::max(d, e[index]);
    return d;
}

ParamPoly ParamPoly::coefficient_of(std::size_t index, std::uint32_t k) const {
    ParamPoly out;
    for (const auto& [e, c] : terms_) {
        const std::uint32_t ei = index < e.size() ? e[index] : 0;
        if (ei != k) continue;
        Exponents rest = e;
        if (index < rest.size()) rest[index] = 0;
        out.add_term(trimmed(std::move(rest)), c);
    }
    return out;
}

ParamPoly ParamPoly::substitute(std::size_t index, const ParamPoly& value) const {
    const std::uint32_t deg = degree_in(index);
    std::vector<ParamPoly> powers{ParamPoly(Rational(1))};
    for (std::uint32_t k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
    ParamPoly out;
    for (std::uint32_t k = 0; k <= deg; ++k) {
        const ParamPoly coeff = coefficient_of(index, k);
        if (!coeff.is_zero()) out += coeff * powers[k];
    }
    return out;
}

Poly ParamPoly::as_univariate(std::size_t index) const {
    std::vector<Poly::Term> terms;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != index && e[i] != 0) throw std::logic_error("parameter polynomial is not univariate");
        terms.emplace_back(Monomial{index < e.size() ? e[index] : 0u, 0}, c);
    }
    return Poly::from_terms(std::move(terms));
}

void ParamPoly::add_term(Exponents e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(product(ea, eb), ca * cb);
    return out;
}

ParamBivariate::ParamBivariate(const Poly& p) {
    for (const auto& [m, c] : p.terms()) terms_.emplace(m, ParamPoly(c));
}

void ParamBivariate::add_term(Monomial m, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ParamBivariate& ParamBivariate::operator+=(const ParamBivariate& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamBivariate& ParamBivariate::operator-=(const ParamBivariate& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, ParamPoly{} - c);
    return *this;
}

ParamBivariate operator*(const ParamBivariate& a, const ParamBivariate& b) {
    ParamBivariate out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

ParamBivariate ParamBivariate::homogeneous_part(std::uint32_t degree) const {
    ParamBivariate out;
    for (const auto& [m, c] : terms_)
        if (m.total() == degree) out.terms_.emplace(m, c);
    return out;
}

ParamBivariate ParamBivariate::map_linear(const std::function<Poly(const Poly&)>& op) const {
    ParamBivariate out;
    for (const auto& [m, c] : terms_) {
        const Poly image = op(Poly::monomial(1, m));
        for (const auto& [mm, cc] : image.terms()) out.add_term(mm, c * cc);
    }
    return out;
}

ParamBivariate ParamBivariate::substitute(std::size_t index, const ParamPoly& value) const {
    ParamBivariate out;
    for (const auto& [m, c] : terms_) out.add_term(m, c.substitute(index, value));
    return out;
}

Poly ParamBivariate::to_poly() const {
    std::vector<Poly::Term> terms;
    for (const auto& [m, c] : terms_) {
        if (!c.is_constant()) throw std::logic_error("unresolved parameter in coefficient");
        terms.emplace_back(m, c.constant_value());
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace psolve::detail
