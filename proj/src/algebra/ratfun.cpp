#include "extverts/ratfun.hpp"

#include <map>

namespace extverts {

namespace {

poly quotient(const poly& a, const poly& b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw algebra_error("internal: inexact division (" + a.to_string() + ") / (" + b.to_string() + ")");
    return *q;
}

bool is_one(const poly& p)
{
    return p.is_constant() && p.constant_value() == 1;
}

bool needs_parens(const poly& p)
{
    if (p.size() > 1)
        return true;
    if (p.is_constant())
        return !is_integer(p.constant_value());
    // single term: bare only when it is one variable power with coefficient 1
    const term& t = p.leading_term();
    if (t.coeff != 1)
        return true;
    int nonzero = 0;
    for (auto e : t.exps)
        nonzero += e != 0;
    return nonzero > 1;
}

} // namespace

ratfun::ratfun(const poly& p) : num_(p), den_(1)
{
    canonicalize(false);
}

ratfun::ratfun(const poly& num, const poly& den) : num_(num), den_(den)
{
    canonicalize(true);
}

ratfun::ratfun(poly num, poly den, coprime_tag) : num_(std::move(num)), den_(std::move(den))
{
    canonicalize(false);
}

void ratfun::canonicalize(bool reduce)
{
    if (den_.is_zero())
        throw algebra_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = poly(1);
        return;
    }

    exponents mn = num_.min_exponents(), md = den_.min_exponents();
    exponents shift{};
    bool any = false;
    for (var v : all_vars) {
        std::size_t i = index(v);
        int s = is_laurent(v) ? md[i] : std::min(mn[i], md[i]);
        shift[i] = static_cast<std::int16_t>(-s);
        any = any || s != 0;
    }
    if (any) {
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }

    if (reduce && !den_.is_constant()) {
        poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = quotient(num_, g);
            den_ = quotient(den_, g);
        }
    }

    if (den_.leading_coeff() != 1) {
        rational inv = 1 / den_.leading_coeff();
        num_ *= inv;
        den_ *= inv;
    }
}

rational ratfun::constant_value() const
{
    if (!is_constant())
        throw algebra_error("constant_value() on non-constant " + to_string());
    return num_.constant_value() / den_.constant_value();
}

ratfun ratfun::operator-() const
{
    ratfun r = *this;
    r.num_ = -r.num_;
    return r;
}

ratfun& ratfun::operator+=(const ratfun& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        return *this = other;

    if (den_ == other.den_) {
        num_ += other.num_;
        canonicalize(!den_.is_constant());
        return *this;
    }

    poly g = gcd(den_, other.den_);
    if (g.is_constant()) {
        poly n = num_ * other.den_ + other.num_ * den_;
        poly d = den_ * other.den_;
        *this = ratfun(std::move(n), std::move(d), coprime_tag{});
        return *this;
    }
    poly b1 = quotient(den_, g);
    poly d1 = quotient(other.den_, g);
    poly n = num_ * d1 + other.num_ * b1;
    poly g2 = gcd(n, g);
    if (!g2.is_constant()) {
        n = quotient(n, g2);
        g = quotient(g, g2);
    }
    *this = ratfun(std::move(n), b1 * d1 * g, coprime_tag{});
    return *this;
}

ratfun& ratfun::operator-=(const ratfun& other)
{
    return *this += -other;
}

ratfun& ratfun::operator*=(const ratfun& other)
{
    if (is_zero() || other.is_zero())
        return *this = ratfun();
    poly a = num_, b = den_, c = other.num_, d = other.den_;
    if (!d.is_constant()) {
        poly g = gcd(a, d);
        if (!g.is_constant()) {
            a = quotient(a, g);
            d = quotient(d, g);
        }
    }
    if (!b.is_constant()) {
        poly g = gcd(c, b);
        if (!g.is_constant()) {
            c = quotient(c, g);
            b = quotient(b, g);
        }
    }
    *this = ratfun(a * c, b * d, coprime_tag{});
    return *this;
}

ratfun& ratfun::operator/=(const ratfun& other)
{
    return *this *= other.inverse();
}

ratfun ratfun::inverse() const
{
    if (is_zero())
        throw algebra_error("division by zero rational function");
    return ratfun(den_, num_, coprime_tag{});
}

ratfun ratfun::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    // num and den stay coprime under powers
    return ratfun(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), coprime_tag{});
}

ratfun ratfun::laurent_dual() const
{
    return ratfun(num_.laurent_dual(), den_.laurent_dual());
}

ratfun substitute(const poly& p, std::span<const std::pair<var, ratfun>> assignments)
{
    std::array<const ratfun*, num_vars> values{};
    for (const auto& [v, r] : assignments)
        values[index(v)] = &r;

    std::array<std::map<int, ratfun>, num_vars> powers;
    auto power = [&](std::size_t i, int e) -> const ratfun& {
        auto it = powers[i].find(e);
        if (it == powers[i].end())
            it = powers[i].emplace(e, values[i]->pow(e)).first;
        return it->second;
    };

    // Terms that share the substituted part of their exponent vector are
    // collected first, so each distinct product is formed once.
    std::map<exponents, poly> groups;
    for (const auto& t : p.terms()) {
        exponents kept = t.exps, replaced{};
        for (std::size_t i = 0; i < num_vars; ++i)
            if (values[i]) {
                replaced[i] = t.exps[i];
                kept[i] = 0;
            }
        groups[replaced] += poly::monomial(kept, t.coeff);
    }

    ratfun sum;
    for (const auto& [replaced, rest] : groups) {
        ratfun value(rest);
        for (std::size_t i = 0; i < num_vars; ++i)
            if (values[i] && replaced[i] != 0)
                value *= power(i, replaced[i]);
        sum += value;
    }
    return sum;
}

ratfun ratfun::substitute(std::span<const std::pair<var, ratfun>> assignments) const
{
    ratfun d = extverts::substitute(den_, assignments);
    if (d.is_zero())
        throw algebra_error("substitution annihilates the denominator of " + to_string());
    return extverts::substitute(num_, assignments) / d;
}

ratfun ratfun::substitute(var v, const ratfun& value) const
{
    std::pair<var, ratfun> a{v, value};
    return substitute(std::span<const std::pair<var, ratfun>>(&a, 1));
}

std::string ratfun::to_string() const
{
    if (is_one(den_))
        return num_.to_string();
    std::string n = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    std::string d = needs_parens(den_) ? "(" + den_.to_string() + ")" : den_.to_string();
    return n + "/" + d;
}

} // namespace extverts
