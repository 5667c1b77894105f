#include "extverts/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace extverts {

namespace {

constexpr std::array<std::string_view, num_vars> names{"t1", "t2", "m", "θ", "q", "z1", "z2"};

exponents add(const exponents& a, const exponents& b)
{
    exponents r;
    for (std::size_t i = 0; i < num_vars; ++i)
        r[i] = static_cast<std::int16_t>(a[i] + b[i]);
    return r;
}

exponents sub(const exponents& a, const exponents& b)
{
    exponents r;
    for (std::size_t i = 0; i < num_vars; ++i)
        r[i] = static_cast<std::int16_t>(a[i] - b[i]);
    return r;
}

bool divides(const exponents& small, const exponents& big)
{
    for (std::size_t i = 0; i < num_vars; ++i)
        if (small[i] > big[i])
            return false;
    return true;
}

struct lex_greater {
    bool operator()(const exponents& a, const exponents& b) const { return a > b; }
};

// Merge of two sorted term lists; sign = +1 or -1 applied to b.
std::vector<term> merge(const std::vector<term>& a, const std::vector<term>& b, int sign)
{
    std::vector<term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].exps > b[j].exps) {
            out.push_back(a[i++]);
        } else if (b[j].exps > a[i].exps) {
            out.push_back({b[j].exps, sign > 0 ? rational(b[j].coeff) : rational(-b[j].coeff)});
            ++j;
        } else {
            rational c = sign > 0 ? rational(a[i].coeff + b[j].coeff) : rational(a[i].coeff - b[j].coeff);
            if (c != 0)
                out.push_back({a[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({b[j].exps, sign > 0 ? rational(b[j].coeff) : rational(-b[j].coeff)});
    return out;
}

} // namespace

std::string_view var_name(var v)
{
    return names[index(v)];
}

std::optional<var> var_from_name(std::string_view name)
{
    if (name == "theta")
        return var::theta;
    for (var v : all_vars)
        if (names[index(v)] == name)
            return v;
    return std::nullopt;
}

poly::poly(const rational& c)
{
    if (c != 0)
        terms_.push_back({exponents{}, c});
}

poly poly::variable(var v, int power)
{
    exponents e{};
    e[index(v)] = static_cast<std::int16_t>(power);
    return monomial(e, 1);
}

poly poly::monomial(const exponents& e, const rational& c)
{
    poly p;
    if (c != 0)
        p.terms_.push_back({e, c});
    return p;
}

poly poly::from_terms(std::vector<term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const term& a, const term& b) { return a.exps > b.exps; });
    poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0)
                p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0)
        p.terms_.pop_back();
    return p;
}

bool poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exps == exponents{});
}

rational poly::constant_value() const
{
    if (!is_constant())
        throw algebra_error("constant_value() on non-constant polynomial " + to_string());
    return terms_.empty() ? rational(0) : terms_.front().coeff;
}

int poly::degree(var v) const
{
    if (terms_.empty())
        return 0;
    int d = terms_.front().exps[index(v)];
    for (const auto& t : terms_)
        d = std::max<int>(d, t.exps[index(v)]);
    return d;
}

int poly::min_degree(var v) const
{
    if (terms_.empty())
        return 0;
    int d = terms_.front().exps[index(v)];
    for (const auto& t : terms_)
        d = std::min<int>(d, t.exps[index(v)]);
    return d;
}

bool poly::depends_on(var v) const
{
    for (const auto& t : terms_)
        if (t.exps[index(v)] != 0)
            return true;
    return false;
}

int poly::total_degree() const
{
    int d = 0;
    for (const auto& t : terms_) {
        int s = 0;
        for (auto e : t.exps)
            s += e;
        d = std::max(d, s);
    }
    return d;
}

exponents poly::min_exponents() const
{
    if (terms_.empty())
        return {};
    exponents e = terms_.front().exps;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < num_vars; ++i)
            e[i] = std::min(e[i], t.exps[i]);
    return e;
}

poly poly::shifted(const exponents& delta) const
{
    poly p = *this;
    for (auto& t : p.terms_)
        t.exps = add(t.exps, delta);
    return p;
}

poly poly::operator-() const
{
    poly p = *this;
    for (auto& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

poly& poly::operator+=(const poly& other)
{
    if (other.terms_.empty())
        return *this;
    if (terms_.empty())
        return *this = other;
    terms_ = merge(terms_, other.terms_, +1);
    return *this;
}

poly& poly::operator-=(const poly& other)
{
    if (other.terms_.empty())
        return *this;
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
}

poly& poly::operator*=(const poly& other)
{
    return *this = *this * other;
}

poly& poly::operator*=(const rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

poly operator*(const poly& a, const poly& b)
{
    if (a.terms_.empty() || b.terms_.empty())
        return {};
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const poly& mono = a.terms_.size() == 1 ? a : b;
        const poly& other = a.terms_.size() == 1 ? b : a;
        poly p = other;
        const auto& mt = mono.terms_.front();
        for (auto& t : p.terms_) {
            t.exps = add(t.exps, mt.exps);
            t.coeff *= mt.coeff;
        }
        return p;
    }
    std::vector<term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            out.push_back({add(x.exps, y.exps), x.coeff * y.coeff});
    return poly::from_terms(std::move(out));
}

bool operator==(const poly& a, const poly& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

poly poly::pow(unsigned n) const
{
    poly result(1);
    poly base = *this;
    while (n) {
        if (n & 1u)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

poly poly::laurent_dual() const
{
    std::vector<term> out = terms_;
    for (auto& t : out) {
        t.exps[index(var::z1)] = static_cast<std::int16_t>(-t.exps[index(var::z1)]);
        t.exps[index(var::z2)] = static_cast<std::int16_t>(-t.exps[index(var::z2)]);
    }
    return from_terms(std::move(out));
}

poly poly::monic() const
{
    if (terms_.empty() || terms_.front().coeff == 1)
        return *this;
    rational inv = 1 / terms_.front().coeff;
    return *this * inv;
}

rational poly::evaluate(const std::array<rational, num_vars>& point) const
{
    rational sum = 0;
    for (const auto& t : terms_) {
        rational value = t.coeff;
        for (std::size_t i = 0; i < num_vars; ++i) {
            int e = t.exps[i];
            if (e == 0)
                continue;
            if (e < 0 && point[i] == 0)
                throw algebra_error("evaluation of negative power at zero");
            rational base = e > 0 ? point[i] : rational(1 / point[i]);
            rational p;
            mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
            mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
            value *= p;
        }
        sum += value;
    }
    return sum;
}

std::string poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        rational c = t.coeff;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < num_vars; ++i) {
            int e = t.exps[i];
            if (e == 0)
                continue;
            if (any)
                mono << '*';
            mono << names[i];
            if (e != 1)
                mono << '^' << e;
            any = true;
        }
        if (!any)
            out << extverts::to_string(c);
        else if (c == 1)
            out << mono.str();
        else
            out << extverts::to_string(c) << '*' << mono.str();
    }
    return out.str();
}

division_result divide(const poly& a, const poly& b)
{
    if (b.is_zero())
        throw algebra_error("polynomial division by zero");
    const term& lead = b.leading_term();
    rational lead_inv = 1 / lead.coeff;

    std::map<exponents, rational, lex_greater> rem;
    for (const auto& t : a.terms())
        rem.emplace(t.exps, t.coeff);

    std::vector<term> quotient, remainder;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!divides(lead.exps, it->first)) {
            remainder.push_back({it->first, it->second});
            rem.erase(it);
            continue;
        }
        exponents qe = sub(it->first, lead.exps);
        rational qc = it->second * lead_inv;
        for (const auto& t : b.terms()) {
            exponents e = add(t.exps, qe);
            auto [pos, inserted] = rem.try_emplace(e, 0);
            pos->second -= qc * t.coeff;
            if (pos->second == 0)
                rem.erase(pos);
        }
        quotient.push_back({qe, std::move(qc)});
    }
    return {poly::from_terms(std::move(quotient)), poly::from_terms(std::move(remainder))};
}

std::optional<poly> divide_exact(const poly& a, const poly& b)
{
    if (b.is_zero())
        throw algebra_error("polynomial division by zero");
    if (a.is_zero())
        return poly{};
    if (b.is_constant())
        return a * rational(1 / b.constant_value());

    // Bring both into the polynomial range: ordinary variables may not be
    // shifted, Laurent ones are normalized to minimum exponent 0.
    exponents sa{}, sb{};
    exponents ma = a.min_exponents(), mb = b.min_exponents();
    for (var v : all_vars) {
        std::size_t i = index(v);
        if (is_laurent(v)) {
            sa[i] = ma[i];
            sb[i] = mb[i];
        } else if (ma[i] < 0 || mb[i] < 0) {
            throw algebra_error("negative exponent in a non-Laurent variable");
        }
    }
    poly an = a.shifted(sub(exponents{}, sa));
    poly bn = b.shifted(sub(exponents{}, sb));

    if (bn.is_monomial()) {
        const term& lb = bn.leading_term();
        for (const auto& t : an.terms())
            if (!divides(lb.exps, t.exps))
                return std::nullopt;
        rational inv = 1 / lb.coeff;
        poly q = an.shifted(sub(exponents{}, lb.exps)) * inv;
        return q.shifted(sub(sa, sb));
    }

    // Cheap necessary conditions before running the division.
    for (var v : all_vars)
        if (bn.degree(v) > an.degree(v))
            return std::nullopt;

    auto [q, r] = divide(an, bn);
    if (!r.is_zero())
        return std::nullopt;
    return q.shifted(sub(sa, sb));
}

} // namespace extverts
