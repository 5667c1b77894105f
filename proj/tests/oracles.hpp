#pragma once
// Test-only reference computations, written independently of the library
// algorithms they check.

#include "extverts/partition.hpp"
#include "extverts/ratfun.hpp"
#include "extverts/symfunc.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using namespace extverts;

// ---------------------------------------------------------------------------
// Polynomials in finitely many commuting variables x_1..x_N, rational coefficients.

using xpoly = std::map<std::vector<int>, rational>;

inline xpoly xmul(const xpoly& a, const xpoly& b)
{
    xpoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline xpoly xpower_sum(int k, int n_vars)
{
    xpoly out;
    for (int i = 0; i < n_vars; ++i) {
        std::vector<int> e(n_vars, 0);
        e[i] = k;
        out[e] = 1;
    }
    return out;
}

inline xpoly xpower_sum_product(const partition& rho, int n_vars)
{
    xpoly out{{std::vector<int>(n_vars, 0), rational(1)}};
    for (int part : rho.parts())
        out = xmul(out, xpower_sum(part, n_vars));
    return out;
}

// Sum of all distinct rearrangements of lambda padded with zeros.
inline xpoly xmonomial_sym(const partition& lambda, int n_vars)
{
    std::vector<int> e(n_vars, 0);
    for (int i = 0; i < lambda.length(); ++i)
        e[i] = lambda.parts()[i];
    std::sort(e.begin(), e.end());
    xpoly out;
    do
        out[e] = 1;
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

// Solves M c = b over Q by Gauss-Jordan elimination; the system must be
// consistent with a unique solution.
inline std::vector<rational> solve(std::vector<std::vector<rational>> rows, std::vector<rational> rhs)
{
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            throw std::runtime_error("singular system");
        std::swap(rows[p], rows[r]);
        std::swap(rhs[p], rhs[r]);
        rational inv = 1 / rows[r][c];
        for (auto& v : rows[r])
            v *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            rational f = rows[i][c];
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rhs[i] != 0)
            throw std::runtime_error("inconsistent system");
    return std::vector<rational>(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(n));
}

// m_lambda in the power-sum basis, by expanding both sides in |lambda| variables.
inline std::map<partition, rational> monomial_in_power_sums(const partition& lambda)
{
    const int n = lambda.size();
    const int n_vars = std::max(n, 1);
    auto basis = enumerate(n);
    std::vector<xpoly> ps;
    std::map<std::vector<int>, std::size_t> row_of;
    for (const auto& rho : basis) {
        ps.push_back(xpower_sum_product(rho, n_vars));
        for (const auto& [e, c] : ps.back())
            row_of.try_emplace(e, row_of.size());
    }
    xpoly target = xmonomial_sym(lambda, n_vars);
    for (const auto& [e, c] : target)
        row_of.try_emplace(e, row_of.size());

    std::vector<std::vector<rational>> rows(row_of.size(), std::vector<rational>(basis.size()));
    std::vector<rational> rhs(row_of.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [e, c] : ps[j])
            rows[row_of[e]][j] = c;
    for (const auto& [e, c] : target)
        rhs[row_of[e]] = c;
    auto sol = solve(rows, rhs);
    std::map<partition, rational> out;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (sol[j] != 0)
            out[basis[j]] = sol[j];
    return out;
}

// Coefficient of x^nu (nu padded to |rho| variables) in p_rho: the number of
// ways to send each part of rho to a variable so that the exponents add to nu.
inline long monomial_coefficient(const partition& rho, const partition& nu)
{
    const int n_vars = std::max(rho.size(), 1);
    std::vector<int> target(n_vars, 0);
    for (int i = 0; i < nu.length(); ++i)
        target[i] = nu.parts()[i];
    std::vector<int> acc(n_vars, 0);
    const auto& parts = rho.parts();
    long count = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == parts.size()) {
            count += acc == target ? 1 : 0;
            return;
        }
        for (int v = 0; v < n_vars; ++v) {
            if (acc[v] + parts[k] > target[v])
                continue;
            acc[v] += parts[k];
            self(self, k + 1);
            acc[v] -= parts[k];
        }
    };
    rec(rec, 0);
    return count;
}

// ---------------------------------------------------------------------------
// Symmetric-function identities.

// Elementary e_0..e_max via Newton: d e_d = sum_{i=1..d} (-1)^{i-1} e_{d-i} p_i.
inline std::vector<symfunc> newton_elementary(int max_degree)
{
    std::vector<symfunc> e{symfunc(ratfun(1))};
    for (int d = 1; d <= max_degree; ++d) {
        symfunc acc;
        for (int i = 1; i <= d; ++i) {
            symfunc term = e[d - i] * symfunc::power_sum(partition{i});
            if (i % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        e.push_back(acc * ratfun(rational(1, d)));
    }
    return e;
}

// Complete homogeneous h_k = sum_{rho |- k} p_rho / z_rho.
inline symfunc complete_h(int k)
{
    if (k < 0)
        return {};
    symfunc out;
    for (const auto& rho : enumerate(k))
        out.add_term(rho, ratfun(rational(integer(1), z_factor(rho))));
    return out;
}

// Schur s_lambda = det(h_{lambda_i - i + j}) by Laplace expansion along the first row.
inline symfunc jacobi_trudi(const partition& lambda)
{
    const int l = lambda.length();
    if (l == 0)
        return symfunc(ratfun(1));
    std::vector<std::vector<symfunc>> m(l, std::vector<symfunc>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            m[i][j] = complete_h(lambda.parts()[i] - i + j);
    auto det = [&](auto&& self, std::vector<int> rows, std::vector<int> cols) -> symfunc {
        if (rows.size() == 1)
            return m[rows[0]][cols[0]];
        symfunc acc;
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (m[rows[0]][cols[c]].is_zero())
                continue;
            std::vector<int> sub_cols = cols;
            sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(c));
            symfunc minor = m[rows[0]][cols[c]] * self(self, sub_rows, sub_cols);
            if (c % 2 == 0)
                acc += minor;
            else
                acc -= minor;
        }
        return acc;
    };
    std::vector<int> idx(l);
    for (int i = 0; i < l; ++i)
        idx[i] = i;
    return det(det, idx, idx);
}

inline integer hook_product(const partition& lambda)
{
    integer h = 1;
    for (box b : lambda.boxes()) {
        int a = lambda.parts()[b.row - 1] - b.col;
        int l = 0;
        for (int r = b.row + 1; r <= lambda.length() && lambda.parts()[r - 1] >= b.col; ++r)
            ++l;
        h *= a + l + 1;
    }
    return h;
}

// Partition counts by the standard coin-change recurrence.
inline std::vector<long> partition_counts(int max_n)
{
    std::vector<long> p(max_n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= max_n; ++part)
        for (int n = part; n <= max_n; ++n)
            p[n] += p[n - part];
    return p;
}

// ---------------------------------------------------------------------------
// Random small rational functions.

class random_ratfun {
public:
    explicit random_ratfun(unsigned seed, std::vector<var> vars = {var::t1, var::t2, var::m, var::z1})
        : rng_(seed), vars_(std::move(vars))
    {
    }

    poly random_poly(int max_terms = 3, int max_exp = 2)
    {
        std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-3, 3), ex(0, max_exp);
        std::uniform_int_distribution<int> lex(-1, max_exp);
        poly p;
        int n = nterms(rng_);
        for (int k = 0; k < n; ++k) {
            exponents e{};
            for (var v : vars_)
                e[index(v)] = static_cast<std::int16_t>(is_laurent(v) ? lex(rng_) : ex(rng_));
            int c = coeff(rng_);
            p += poly::monomial(e, rational(c));
        }
        return p;
    }

    poly nonzero_poly()
    {
        for (;;) {
            poly p = random_poly();
            if (!p.is_zero())
                return p;
        }
    }

    ratfun operator()() { return ratfun(random_poly(), nonzero_poly()); }

    ratfun nonzero()
    {
        for (;;) {
            ratfun r = (*this)();
            if (!r.is_zero())
                return r;
        }
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
    std::vector<var> vars_;
};

} // namespace oracle
