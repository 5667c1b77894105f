#include "extverts/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace extverts {

qseries::qseries(std::size_t order) : order_(order), coeffs_(order + 1) {}

qseries::qseries(std::size_t order, std::vector<ratfun> coeffs) : order_(order), coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

qseries qseries::one(std::size_t order)
{
    qseries s(order);
    s[0] = ratfun(1);
    return s;
}

qseries& qseries::operator+=(const qseries& other)
{
    if (other.order_ < order_) {
        order_ = other.order_;
        coeffs_.resize(order_ + 1);
    }
    for (std::size_t k = 0; k <= order_; ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

qseries operator*(const qseries& a, const qseries& b)
{
    std::size_t order = std::min(a.order_, b.order_);
    qseries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            if (!b.coeffs_[j].is_zero())
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

bool operator==(const qseries& a, const qseries& b)
{
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

qseries qseries::substitute(std::span<const std::pair<var, ratfun>> assignments) const
{
    qseries r(order_);
    for (std::size_t k = 0; k <= order_; ++k)
        r.coeffs_[k] = coeffs_[k].substitute(assignments);
    return r;
}

std::string qseries::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k <= order_; ++k) {
        if (coeffs_[k].is_zero())
            continue;
        if (!first)
            out << " + ";
        first = false;
        std::string c = coeffs_[k].to_string();
        bool bare = coeffs_[k].is_constant() && coeffs_[k].constant_value() >= 0 && is_integer(coeffs_[k].constant_value());
        if (k == 0) {
            out << c;
            continue;
        }
        if (!(coeffs_[k].is_constant() && coeffs_[k].constant_value() == 1))
            out << (bare ? c : "(" + c + ")") << "*";
        out << "q";
        if (k > 1)
            out << "^" << k;
    }
    if (first)
        out << "0";
    out << " + O(q^" << order_ + 1 << ")";
    return out.str();
}

qseries exp(const qseries& s)
{
    if (!s[0].is_zero())
        throw algebra_error("exp of a q-series requires zero constant term");
    // e' = s' e  =>  n e_n = sum_{k=1..n} k s_k e_{n-k}
    std::size_t order = s.order();
    qseries e(order);
    e[0] = ratfun(1);
    for (std::size_t n = 1; n <= order; ++n) {
        ratfun acc;
        for (std::size_t k = 1; k <= n; ++k)
            if (!s[k].is_zero() && !e[n - k].is_zero())
                acc += ratfun(static_cast<long>(k)) * s[k] * e[n - k];
        e[n] = acc * ratfun(rational(1, static_cast<long>(n)));
    }
    return e;
}

qseries log(const qseries& s)
{
    if (!(s[0] == ratfun(1)))
        throw algebra_error("log of a q-series requires constant term 1, got " + s[0].to_string());
    // s l' = s'  =>  n l_n = n s_n - sum_{k=1..n-1} k l_k s_{n-k}
    std::size_t order = s.order();
    qseries l(order);
    for (std::size_t n = 1; n <= order; ++n) {
        ratfun acc = ratfun(static_cast<long>(n)) * s[n];
        for (std::size_t k = 1; k < n; ++k)
            if (!l[k].is_zero() && !s[n - k].is_zero())
                acc -= ratfun(static_cast<long>(k)) * l[k] * s[n - k];
        l[n] = acc * ratfun(rational(1, static_cast<long>(n)));
    }
    return l;
}

qseries pow(const qseries& s, const ratfun& exponent)
{
    qseries l = log(s);
    for (std::size_t k = 0; k <= l.order(); ++k)
        l[k] *= exponent;
    return exp(l);
}

qseries euler_product(std::size_t order)
{
    qseries p = qseries::one(order);
    for (std::size_t n = 1; n <= order; ++n) {
        qseries f = qseries::one(order);
        f[n] = ratfun(-1);
        p = p * f;
    }
    return p;
}

} // namespace extverts
