// Darboux polynomial search by degree blocks.
//
// Write f = f_d + f_{d-1} + ... and g = g_{m-1} + ... + g_0 in homogeneous
// parts, m = max(deg M, deg N), and let X_m be the top homogeneous part of
// D. Matching the degree d+m-1 block of D[f] = g*f gives X_m f_d = g_{m-1} f_d,
// so f_d is an invariant curve of the homogeneous top field: a product of
// the rational irreducible factors of E = x*M_m - y*N_m (unless E == 0).
// With f_d fixed, block s is linear in the new unknowns (f_{d-s},
// g_{m-1-s}) apart from products of earlier unknowns. Kernel directions
// are carried as symbolic parameters, which turns those products into
// polynomial constraints on a handful of parameters, solved at the end.

#include <algorithm>
#include <map>
#include <functional>
#include <stdexcept>

#include "psolve/darboux.hpp"
#include "psolve/factor.hpp"
#include "param_poly.hpp"
#include "psolve/linalg.hpp"

namespace psolve {

namespace {

constexpr std::size_t kMaxBranches = 64;
constexpr std::size_t kMaxParams = 12;
constexpr int kMaxDepth = 32;

struct TopField {
    Poly N;
    Poly M;

    Poly apply(const Poly& p) const { return N * partial(p, Var::x) + M * partial(p, Var::y); }
};

// Monic products of `factors` (with repetition) of total degree d.
std::vector<Poly> products_of_degree(const std::vector<Poly>& factors, int d) {
    std::vector<Poly> out;
    std::function<void(std::size_t, int, const Poly&)> rec = [&](std::size_t i, int left, const Poly& acc) {
        if (left == 0) {
            out.push_back(acc.monic());
            return;
        }
        if (i == factors.size()) return;
        const int fd = factors[i].degree();
        Poly prod = acc;
        for (int used = 0; used * fd <= left; ++used) {
            rec(i + 1, left - used * fd, prod);
            prod *= factors[i];
        }
    };
    rec(0, d, Poly(1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Basis of {f : deg f <= d, D[f] = g*f} restricted to elements of degree d.
std::vector<Poly> eigen_basis(const VectorField& vf, int d, const Poly& g) {
    const auto basis = monomials_up_to(static_cast<std::uint32_t>(d));
    std::vector<Poly> columns;
    std::vector<Poly> mons;
    for (const auto& mu : basis) {
        Poly p = Poly::monomial(1, mu);
        columns.push_back(vf.apply(p) - g * p);
        mons.push_back(std::move(p));
    }
    auto sol = polynomial_identity_system(columns, Poly{}).solve();
    std::vector<Poly> out;
    if (!sol) return out;
    for (const auto& v : sol->nullspace) {
        Poly f = combine(mons, v);
        if (f.degree() == d) out.push_back(f.monic());
    }
    return out;
}

// State of the block elimination for one top part: f and g with
// coefficients polynomial in the kernel parameters introduced so far, and
// the consistency conditions those parameters must satisfy.
struct BlockState {
    detail::ParamBivariate f;
    detail::ParamBivariate g;
    std::vector<detail::ParamPoly> constraints;
    std::size_t params = 0;
};

// Runs blocks s = 1 .. d+m-1. Each block is linear in the new unknowns
// (f_{d-s}, g_{m-1-s}) with a matrix that does not depend on the
// parameters; only the right-hand side does. Free columns become new
// parameters, dependent rows become constraints.
std::optional<BlockState> eliminate_blocks(const VectorField& vf, const TopField& top_field, const Poly& top,
                                           const Poly& g_top, int m, int d) {
    BlockState st{detail::ParamBivariate(top), detail::ParamBivariate(g_top), {}, 0};
    const auto D = [&vf](const Poly& p) { return vf.apply(p); };

    for (int s = 1; s <= d + m - 1; ++s) {
        const auto block_degree = static_cast<std::uint32_t>(d + m - 1 - s);
        std::vector<Monomial> f_mons;
        std::vector<Monomial> g_mons;
        if (s <= d) f_mons = monomials_of_degree(static_cast<std::uint32_t>(d - s));
        if (s <= m - 1) g_mons = monomials_of_degree(static_cast<std::uint32_t>(m - 1 - s));

        std::vector<Poly> columns;
        for (const auto& mu : f_mons) {
            const Poly p = Poly::monomial(1, mu);
            columns.push_back(top_field.apply(p) - g_top * p);
        }
        for (const auto& nu : g_mons) columns.push_back(-(Poly::monomial(1, nu) * top));

        const auto rows = monomials_of_degree(block_degree);
        std::vector<std::vector<Rational>> matrix(rows.size(), std::vector<Rational>(columns.size()));
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (std::size_t i = 0; i < rows.size(); ++i) matrix[i][j] = columns[j].coefficient(rows[i]);

        const detail::ParamBivariate known =
            (st.f.map_linear(D) - st.g * st.f).homogeneous_part(block_degree);
        std::vector<detail::ParamPoly> rhs(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto it = known.terms().find(rows[i]);
            if (it != known.terms().end()) rhs[i] = detail::ParamPoly{} - it->second;
        }

        const Echelon ech = echelon_form(std::move(matrix), columns.size());
        std::vector<detail::ParamPoly> reduced_rhs(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (!ech.transform[i][k].is_zero() && !rhs[k].is_zero())
                    reduced_rhs[i] += rhs[k] * ech.transform[i][k];

        for (std::size_t i = ech.rank(); i < rows.size(); ++i) {
            if (reduced_rhs[i].is_zero()) continue;
            if (reduced_rhs[i].is_constant()) return std::nullopt;
            st.constraints.push_back(std::move(reduced_rhs[i]));
        }

        std::vector<detail::ParamPoly> solution(columns.size());
        std::vector<bool> is_pivot(columns.size(), false);
        for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (!is_pivot[c]) solution[c] = detail::ParamPoly::param(st.params++);
        if (st.params > kMaxParams) return std::nullopt;
        for (std::size_t i = 0; i < ech.rank(); ++i) {
            detail::ParamPoly value = reduced_rhs[i];
            for (std::size_t c = 0; c < columns.size(); ++c)
                if (!is_pivot[c] && !ech.reduced[i][c].is_zero()) value -= solution[c] * ech.reduced[i][c];
            solution[ech.pivot_cols[i]] = std::move(value);
        }
        for (std::size_t j = 0; j < f_mons.size(); ++j) st.f.add_term(f_mons[j], solution[j]);
        for (std::size_t j = 0; j < g_mons.size(); ++j) st.g.add_term(g_mons[j], solution[f_mons.size() + j]);
    }
    return st;
}

using Assignment = std::map<std::size_t, Rational>;

// Value of c under `a`, unassigned parameters read as zero.
Rational evaluate(const detail::ParamPoly& c, const Assignment& a) {
    detail::ParamPoly v = c;
    for (std::size_t i : c.params()) {
        auto it = a.find(i);
        v = v.substitute(i, it == a.end() ? Rational{} : it->second);
    }
    return v.constant_value();
}

std::vector<detail::ParamPoly> substitute_all(const std::vector<detail::ParamPoly>& cs, std::size_t i,
                                              const detail::ParamPoly& value) {
    std::vector<detail::ParamPoly> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c.substitute(i, value));
    return out;
}

// a^k * c(t_i = -b/a) for k = deg_{t_i} c: free of t_i, and zero exactly
// when c vanishes at t_i = -b/a (a != 0).
detail::ParamPoly eliminant(const detail::ParamPoly& c, std::size_t i, const detail::ParamPoly& a,
                            const detail::ParamPoly& b) {
    const std::uint32_t k = c.degree_in(i);
    const detail::ParamPoly minus_b = detail::ParamPoly{} - b;
    std::vector<detail::ParamPoly> a_pow{Rational(1)};
    std::vector<detail::ParamPoly> b_pow{Rational(1)};
    for (std::uint32_t j = 1; j <= k; ++j) {
        a_pow.push_back(a_pow.back() * a);
        b_pow.push_back(b_pow.back() * minus_b);
    }
    detail::ParamPoly out;
    for (std::uint32_t j = 0; j <= k; ++j) out += c.coefficient_of(i, j) * b_pow[j] * a_pow[k - j];
    return out;
}

// Rational points of {c = 0 : c in cs}, found by linear substitution,
// rational roots of univariate members, and elimination of parameters
// that occur linearly. Incomplete by design: when none of those rules
// applies the highest parameter is set to zero. Parameters absent from
// an assignment are free and taken as zero.
void solve_constraints(std::vector<detail::ParamPoly> cs, int depth, std::vector<Assignment>& out) {
    if (out.size() >= kMaxBranches || depth > kMaxDepth) return;
    std::vector<detail::ParamPoly> live;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        if (c.is_constant()) return;
        if (std::find(live.begin(), live.end(), c) == live.end()) live.push_back(std::move(c));
    }
    if (live.empty()) {
        out.emplace_back();
        return;
    }

    // a*t_i + b with constant a.
    for (const auto& c : live) {
        for (std::size_t i : c.params()) {
            if (c.degree_in(i) != 1 || !c.coefficient_of(i, 1).is_constant()) continue;
            const detail::ParamPoly value =
                (detail::ParamPoly{} - c.coefficient_of(i, 0)) * c.coefficient_of(i, 1).constant_value().inverse();
            std::vector<Assignment> sub;
            solve_constraints(substitute_all(live, i, value), depth + 1, sub);
            for (auto& a : sub) {
                a[i] = evaluate(value, a);
                out.push_back(std::move(a));
            }
            return;
        }
    }

    // A constraint in one parameter: branch on its rational roots.
    for (const auto& c : live) {
        const auto ps = c.params();
        if (ps.size() != 1) continue;
        const std::size_t i = *ps.begin();
        Poly common = c.as_univariate(i);
        for (const auto& other : live) {
            const auto ops = other.params();
            if (ops.size() == 1 && *ops.begin() == i) common = gcd(common, other.as_univariate(i));
        }
        for (const auto& factor : univariate_factors(common)) {
            if (factor.degree() != 1) continue;
            const Rational root = -factor.constant_term();
            std::vector<Assignment> sub;
            solve_constraints(substitute_all(live, i, root), depth + 1, sub);
            for (auto& a : sub) {
                a[i] = root;
                out.push_back(std::move(a));
            }
        }
        return;
    }

    // a*t_i + b with non-constant a: solve the eliminated system for the
    // other parameters, then t_i = -b/a; the case a = b = 0 separately.
    for (std::size_t ci = 0; ci < live.size(); ++ci) {
        const auto& c = live[ci];
        for (std::size_t i : c.params()) {
            if (c.degree_in(i) != 1) continue;
            const detail::ParamPoly a = c.coefficient_of(i, 1);
            const detail::ParamPoly b = c.coefficient_of(i, 0);

            std::vector<detail::ParamPoly> reduced;
            for (std::size_t k = 0; k < live.size(); ++k)
                if (k != ci) reduced.push_back(live[k].degree_in(i) == 0 ? live[k] : eliminant(live[k], i, a, b));
            std::vector<Assignment> sub;
            solve_constraints(std::move(reduced), depth + 1, sub);
            for (auto& asg : sub) {
                asg.erase(i);
                const Rational av = evaluate(a, asg);
                if (av.is_zero()) continue;
                asg[i] = -evaluate(b, asg) / av;
                const bool ok = std::all_of(live.begin(), live.end(),
                                            [&](const detail::ParamPoly& q) { return evaluate(q, asg).is_zero(); });
                if (ok) out.push_back(std::move(asg));
            }

            std::vector<detail::ParamPoly> degenerate;
            for (std::size_t k = 0; k < live.size(); ++k)
                if (k != ci) degenerate.push_back(live[k]);
            degenerate.push_back(a);
            degenerate.push_back(b);
            solve_constraints(std::move(degenerate), depth + 1, out);
            return;
        }
    }

    std::size_t last = 0;
    for (const auto& c : live)
        for (std::size_t i : c.params()) last = std::max(last, i);
    std::vector<Assignment> sub;
    solve_constraints(substitute_all(live, last, Rational{}), depth + 1, sub);
    for (auto& a : sub) {
        a[last] = Rational{};
        out.push_back(std::move(a));
    }
}

void resolve_parameters(const BlockState& st, std::vector<Poly>& out) {
    std::vector<Assignment> solutions;
    solve_constraints(st.constraints, 0, solutions);
    for (const auto& a : solutions) {
        detail::ParamBivariate f = st.f;
        for (std::size_t i = 0; i < st.params; ++i) {
            auto it = a.find(i);
            f = f.substitute(i, it == a.end() ? Rational{} : it->second);
        }
        out.push_back(f.to_poly());
    }
}

// Uncertified candidates of total degree exactly d.
std::vector<Poly> candidates_of_degree(const VectorField& vf, int d) {
    const int m = vf.degree();
    if (m == 0) return eigen_basis(vf, d, Poly{});

    const auto um = static_cast<std::uint32_t>(m);
    const TopField top_field{vf.N().homogeneous_part(um), vf.M().homogeneous_part(um)};
    const Poly E = Poly::x() * top_field.M - Poly::y() * top_field.N;

    std::vector<Poly> tops;
    if (E.is_zero()) {
        // Top field is h*(x, y): every homogeneous f_d is invariant with
        // g_{m-1} = d*h.
        const Poly h = top_field.N.is_zero() ? *exact_div(top_field.M, Poly::y())
                                             : *exact_div(top_field.N, Poly::x());
        if (m == 1) return eigen_basis(vf, d, h * Rational(d));
        auto factors = homogeneous_factors(h);
        factors.push_back(Poly::x());
        factors.push_back(Poly::y());
        std::sort(factors.begin(), factors.end());
        factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
        tops = products_of_degree(factors, d);
    } else {
        tops = products_of_degree(homogeneous_factors(E), d);
    }

    std::vector<Poly> out;
    for (const auto& top : tops) {
        const auto g_top = exact_div(top_field.apply(top), top);
        if (!g_top) continue;
        if (auto st = eliminate_blocks(vf, top_field, top, *g_top, m, d)) resolve_parameters(*st, out);
    }
    return out;
}

std::optional<DarbouxPair> certify(const VectorField& vf, const Poly& candidate) {
    if (candidate.is_constant()) return std::nullopt;
    Poly f = candidate.monic();
    auto g = cofactor(vf, f);
    if (!g) return std::nullopt;
    return DarbouxPair{std::move(f), std::move(*g)};
}

void sort_unique(std::vector<DarbouxPair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const DarbouxPair& a, const DarbouxPair& b) {
        if (a.f.degree() != b.f.degree()) return a.f.degree() < b.f.degree();
        return a.f < b.f;
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.f == b.f; }),
                pairs.end());
}

}  // namespace

std::vector<DarbouxPair> split_reducible(const VectorField& vf, std::vector<DarbouxPair> pairs) {
    sort_unique(pairs);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < pairs.size() && !changed; ++i) {
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                if (i == j || pairs[j].f.degree() >= pairs[i].f.degree()) continue;
                auto q = exact_div(pairs[i].f, pairs[j].f);
                if (!q) continue;
                // A factor of a Darboux polynomial by a Darboux polynomial
                // is again Darboux.
                auto quotient = certify(vf, *q);
                pairs.erase(pairs.begin() + static_cast<long>(i));
                if (quotient) pairs.push_back(std::move(*quotient));
                sort_unique(pairs);
                changed = true;
                break;
            }
        }
    }
    return pairs;
}

std::vector<DarbouxPair> find_darboux(const VectorField& vf, int degree_bound, Execution exec,
                                      const std::vector<Poly>& hints) {
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
    std::vector<std::vector<DarbouxPair>> per_degree(static_cast<std::size_t>(degree_bound));

    const auto search = [&](int d) {
        auto& bucket = per_degree[static_cast<std::size_t>(d - 1)];
        for (const auto& c : candidates_of_degree(vf, d))
            if (auto pair = certify(vf, c)) bucket.push_back(std::move(*pair));
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int d = 1; d <= degree_bound; ++d) search(d);
    } else {
        for (int d = 1; d <= degree_bound; ++d) search(d);
    }

    std::vector<DarbouxPair> all;
    for (auto& bucket : per_degree) all.insert(all.end(), bucket.begin(), bucket.end());
    for (const auto& h : hints)
        if (auto pair = certify(vf, h)) all.push_back(std::move(*pair));
    return split_reducible(vf, std::move(all));
}

std::vector<DarbouxPair> brute_force_darboux(const VectorField& vf, int degree_bound,
                                             const std::vector<Rational>& coeff_set, Execution exec) {
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
    const auto mons = monomials_up_to(static_cast<std::uint32_t>(degree_bound));
    const std::size_t k = coeff_set.size();
    if (k == 0) return {};
    std::size_t total = 1;
    for (std::size_t i = 0; i < mons.size(); ++i) total *= k;

    const auto test = [&](std::size_t index) -> std::optional<DarbouxPair> {
        std::vector<Poly::Term> terms;
        for (const auto& mu : mons) {
            terms.emplace_back(mu, coeff_set[index % k]);
            index /= k;
        }
        return certify(vf, Poly::from_terms(std::move(terms)));
    };

    std::vector<DarbouxPair> found;
    if (exec == Execution::parallel) {
#pragma omp parallel
        {
            std::vector<DarbouxPair> local;
#pragma omp for schedule(static) nowait
            for (long i = 0; i < static_cast<long>(total); ++i)
                if (auto p = test(static_cast<std::size_t>(i))) local.push_back(std::move(*p));
#pragma omp critical
            found.insert(found.end(), local.begin(), local.end());
        }
    } else {
        for (std::size_t i = 0; i < total; ++i)
            if (auto p = test(i)) found.push_back(std::move(*p));
    }
    sort_unique(found);
    return found;
}

}  // namespace psolve
