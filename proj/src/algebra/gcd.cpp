// Multivariate GCD over Q by recursive subresultant PRS.
//
// A polynomial is viewed as univariate in a main variable x with
// coefficients in Q[other variables]; contents are computed recursively,
// so the recursion depth is bounded by the number of variables involved.

#include "extverts/poly.hpp"

#include <algorithm>

namespace extverts {

namespace {

using upoly = std::vector<poly>;

void trim(upoly& u)
{
    while (!u.empty() && u.back().is_zero())
        u.pop_back();
}

int deg(const upoly& u)
{
    return static_cast<int>(u.size()) - 1;
}

upoly to_upoly(const poly& p, var x)
{
    std::size_t xi = index(x);
    upoly u(static_cast<std::size_t>(p.degree(x)) + 1);
    std::vector<std::vector<term>> buckets(u.size());
    for (const auto& t : p.terms()) {
        term c = t;
        auto k = static_cast<std::size_t>(c.exps[xi]);
        c.exps[xi] = 0;
        buckets[k].push_back(std::move(c));
    }
    for (std::size_t k = 0; k < u.size(); ++k)
        u[k] = poly::from_terms(std::move(buckets[k]));
    trim(u);
    return u;
}

poly from_upoly(const upoly& u, var x)
{
    std::vector<term> out;
    for (std::size_t k = 0; k < u.size(); ++k)
        for (const auto& t : u[k].terms()) {
            term c = t;
            c.exps[index(x)] = static_cast<std::int16_t>(k);
            out.push_back(std::move(c));
        }
    return poly::from_terms(std::move(out));
}

poly exact(const poly& a, const poly& b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw algebra_error("internal: inexact division in gcd (" + a.to_string() + ") / (" + b.to_string() + ")");
    return *q;
}

upoly divide_coeffs(const upoly& u, const poly& c)
{
    if (c.is_constant() && c.constant_value() == 1)
        return u;
    upoly r(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
        r[k] = exact(u[k], c);
    return r;
}

poly gcd_impl(const poly& a, const poly& b);

poly content(const upoly& u)
{
    poly g;
    for (const auto& c : u) {
        g = gcd_impl(g, c);
        if (g.is_constant())
            return poly(1);
    }
    return g;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
upoly prem(upoly a, const upoly& b)
{
    int db = deg(b);
    const poly& lb = b.back();
    int e = deg(a) - db + 1;
    while (!a.empty() && deg(a) >= db) {
        poly la = a.back();
        int shift = deg(a) - db;
        for (auto& c : a)
            c *= lb;
        for (int k = 0; k <= db; ++k)
            a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
        trim(a);
        --e;
    }
    if (e > 0) {
        poly f = lb.pow(static_cast<unsigned>(e));
        for (auto& c : a)
            c *= f;
    }
    return a;
}

// Euclid over Q[x] when every coefficient is a constant.
upoly univariate_gcd(upoly a, upoly b)
{
    auto make_monic = [](upoly& u) {
        rational inv = 1 / u.back().constant_value();
        for (auto& c : u)
            c *= inv;
    };
    while (!b.empty()) {
        // a mod b over a field
        rational lb_inv = 1 / b.back().constant_value();
        while (!a.empty() && deg(a) >= deg(b)) {
            rational f = a.back().constant_value() * lb_inv;
            int shift = deg(a) - deg(b);
            for (int k = 0; k <= deg(b); ++k)
                a[static_cast<std::size_t>(k + shift)] -= b[static_cast<std::size_t>(k)] * f;
            trim(a);
        }
        std::swap(a, b);
    }
    make_monic(a);
    return a;
}

bool all_constant(const upoly& u)
{
    return std::all_of(u.begin(), u.end(), [](const poly& c) { return c.is_constant(); });
}

poly gcd_main(const poly& pa, const poly& pb, var x)
{
    upoly a = to_upoly(pa, x);
    upoly b = to_upoly(pb, x);
    if (deg(a) < deg(b))
        std::swap(a, b);

    if (all_constant(a) && all_constant(b))
        return from_upoly(univariate_gcd(std::move(a), std::move(b)), x);

    poly ca = content(a), cb = content(b);
    poly d = gcd_impl(ca, cb);
    a = divide_coeffs(a, ca);
    b = divide_coeffs(b, cb);

    poly g(1), h(1);
    for (;;) {
        int delta = deg(a) - deg(b);
        upoly r = prem(a, b);
        if (r.empty())
            break;
        if (deg(r) == 0) {
            b = upoly{poly(1)};
            break;
        }
        poly divisor = g * h.pow(static_cast<unsigned>(delta));
        a = std::move(b);
        b = divide_coeffs(r, divisor);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    upoly pp = divide_coeffs(b, content(b));
    return (d * from_upoly(pp, x)).monic();
}

poly gcd_impl(const poly& a, const poly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();

    // Strip each side's monomial content; the ordinary-variable part of the
    // common monomial content is restored at the end.
    exponents ma = a.min_exponents(), mb = b.min_exponents();
    exponents common{};
    for (var v : all_vars) {
        std::size_t i = index(v);
        if (!is_laurent(v))
            common[i] = std::min(ma[i], mb[i]);
        ma[i] = static_cast<std::int16_t>(-ma[i]);
        mb[i] = static_cast<std::int16_t>(-mb[i]);
    }
    poly x = a.shifted(ma);
    poly y = b.shifted(mb);
    poly mono = poly::monomial(common, 1);

    if (x.is_constant() || y.is_constant())
        return mono;
    if (x.monic() == y.monic())
        return mono * x.monic();

    // A variable present on one side only cannot occur in the gcd; replace
    // that side by its content with respect to the variable.
    for (bool changed = true; changed;) {
        changed = false;
        for (var v : all_vars) {
            bool in_x = x.depends_on(v), in_y = y.depends_on(v);
            if (in_x == in_y)
                continue;
            poly& side = in_x ? x : y;
            side = content(to_upoly(side, v));
            if (side.is_constant())
                return mono;
            changed = true;
        }
    }

    // Main variable: the shared one with the smallest degree.
    std::optional<var> best;
    int best_deg = 0;
    for (var v : all_vars) {
        if (!x.depends_on(v))
            continue;
        int d = std::min(x.degree(v), y.degree(v));
        if (!best || d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    if (!best)
        return mono;
    return mono * gcd_main(x, y, *best);
}

} // namespace

poly gcd(const poly& a, const poly& b)
{
    return gcd_impl(a, b);
}

} // namespace extverts
