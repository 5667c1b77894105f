#pragma once

#include "extverts/ratfun.hpp"

#include <string>
#include <vector>

namespace extverts {

/// Power series in q truncated after q^order, with rational-function
/// coefficients. Arithmetic never looks past `order`; mixing orders
/// truncates to the smaller one.
class qseries {
public:
    explicit qseries(std::size_t order);
    qseries(std::size_t order, std::vector<ratfun> coeffs);

    std::size_t order() const { return order_; }
    const ratfun& operator[](std::size_t k) const { return coeffs_[k]; }
    ratfun& operator[](std::size_t k) { return coeffs_[k]; }
    const std::vector<ratfun>& coeffs() const { return coeffs_; }

    static qseries one(std::size_t order);

    qseries& operator+=(const qseries& other);
    friend qseries operator+(qseries a, const qseries& b) { return a += b; }
    friend qseries operator*(const qseries& a, const qseries& b);
    friend bool operator==(const qseries& a, const qseries& b);

    /// Coefficientwise substitution.
    qseries substitute(std::span<const std::pair<var, ratfun>> assignments) const;

    std::string to_string() const;

private:
    std::size_t order_;
    std::vector<ratfun> coeffs_;
};

/// exp(s); requires s[0] == 0.
qseries exp(const qseries& s);
/// log(s); requires s[0] == 1.
qseries log(const qseries& s);
/// s^exponent computed as exp(exponent * log(s)); requires s[0] == 1.
qseries pow(const qseries& s, const ratfun& exponent);

/// prod_{n=1..order} (1 - q^n) truncated at `order`.
qseries euler_product(std::size_t order);

} // namespace extverts
