#include "psolve/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace psolve {

namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row to integers with gcd 1.
IntRow to_integer_row(const std::vector<Rational>& row, const Rational& rhs) {
    mpz_class den = 1;
    for (const auto& c : row) den = lcm(den, c.denominator());
    den = lcm(den, rhs.denominator());
    IntRow out;
    out.reserve(row.size() + 1);
    for (const auto& c : row) out.push_back(c.numerator() * (den / c.denominator()));
    out.push_back(rhs.numerator() * (den / rhs.denominator()));
    return out;
}

void remove_content(IntRow& row) {
    mpz_class g = 0;
    for (const auto& v : row) {
        g = gcd(g, v);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

void LinearSystem::add_equation(std::vector<Rational> coefficients, Rational rhs) {
    if (coefficients.size() != unknowns_) throw std::invalid_argument("equation width does not match unknown count");
    rows_.push_back(std::move(coefficients));
    rhs_.push_back(std::move(rhs));
}

std::optional<LinearSolution> LinearSystem::solve() const {
    const std::size_t n = unknowns_;
    std::vector<IntRow> rows;
    rows.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        rows.push_back(to_integer_row(rows_[i], rhs_[i]));
        remove_content(rows.back());
    }

    // Reduced row echelon form over Z: each elimination step is
    // row_j <- p*row_j - a*row_i followed by content removal.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const mpz_class p = rows[r][col];
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j == r || rows[j][col] == 0) continue;
            const mpz_class a = rows[j][col];
            for (std::size_t k = 0; k <= n; ++k) rows[j][k] = p * rows[j][k] - a * rows[r][k];
            remove_content(rows[j]);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t j = r; j < rows.size(); ++j)
        if (rows[j][n] != 0) return std::nullopt;

    LinearSolution sol;
    sol.particular.assign(n, Rational{});
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        const std::size_t c = pivot_cols[i];
        is_pivot[c] = true;
        sol.particular[c] = Rational(rows[i][n], rows[i][c]);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational{});
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            const std::size_t c = pivot_cols[i];
            if (rows[i][f] != 0) v[c] = Rational(mpz_class(-rows[i][f]), rows[i][c]);
        }
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

Echelon echelon_form(std::vector<std::vector<Rational>> rows, std::size_t cols) {
    const std::size_t n_rows = rows.size();
    Echelon e;
    e.transform.assign(n_rows, std::vector<Rational>(n_rows));
    for (std::size_t i = 0; i < n_rows; ++i) e.transform[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < n_rows; ++col) {
        std::size_t pivot = r;
        while (pivot < n_rows && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == n_rows) continue;
        std::swap(rows[r], rows[pivot]);
        std::swap(e.transform[r], e.transform[pivot]);
        const Rational inv = rows[r][col].inverse();
        for (auto& v : rows[r]) v *= inv;
        for (auto& v : e.transform[r]) v *= inv;
        for (std::size_t j = 0; j < n_rows; ++j) {
            if (j == r || rows[j][col].is_zero()) continue;
            const Rational a = rows[j][col];
            for (std::size_t k = 0; k < cols; ++k)
                if (!rows[r][k].is_zero()) rows[j][k] -= a * rows[r][k];
            for (std::size_t k = 0; k < n_rows; ++k)
                if (!e.transform[r][k].is_zero()) e.transform[j][k] -= a * e.transform[r][k];
        }
        e.pivot_cols.push_back(col);
        ++r;
    }
    e.reduced = std::move(rows);
    return e;
}

LinearSystem polynomial_identity_system(const std::vector<Poly>& columns, const Poly& target) {
    std::map<Monomial, std::size_t, std::greater<>> row_of;
    for (const auto& col : columns)
        for (const auto& [m, c] : col.terms()) row_of.emplace(m, 0);
    for (const auto& [m, c] : target.terms()) row_of.emplace(m, 0);
    std::size_t idx = 0;
    for (auto& [m, i] : row_of) i = idx++;

    std::vector<std::vector<Rational>> rows(row_of.size(), std::vector<Rational>(columns.size()));
    std::vector<Rational> rhs(row_of.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].terms()) rows[row_of.at(m)][j] = c;
    for (const auto& [m, c] : target.terms()) rhs[row_of.at(m)] = c;

    LinearSystem sys(columns.size());
    for (std::size_t i = 0; i < rows.size(); ++i) sys.add_equation(std::move(rows[i]), std::move(rhs[i]));
    return sys;
}

Poly combine(const std::vector<Poly>& basis, const std::vector<Rational>& weights) {
    if (basis.size() != weights.size()) throw std::invalid_argument("basis/weight size mismatch");
    std::vector<Poly::Term> terms;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (weights[j].is_zero()) continue;
        for (const auto& [m, c] : basis[j].terms()) terms.emplace_back(m, c * weights[j]);
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace psolve
