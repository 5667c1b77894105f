#pragma once

#include "extverts/poly.hpp"

#include <span>
#include <string>
#include <utility>

namespace extverts {

/// Exact rational function num/den in the registry variables.
///
/// Canonical form: gcd(num, den) = 1, den is monic in lex order, has
/// nonnegative exponents and no monomial factor in z1 or z2 (those are
/// units and live in num as possibly negative powers). Canonical form makes
/// operator== an exact equality test.
class ratfun {
public:
    ratfun() : den_(1) {}
    ratfun(const rational& c) : num_(c), den_(1) {}
    ratfun(long c) : ratfun(rational(c)) {}
    ratfun(const poly& p);
    /// Throws algebra_error when den == 0.
    ratfun(const poly& num, const poly& den);

    static ratfun variable(var v) { return ratfun(poly::variable(v)); }

    const poly& num() const { return num_; }
    const poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Requires is_constant().
    rational constant_value() const;
    bool depends_on(var v) const { return num_.depends_on(v) || den_.depends_on(v); }

    ratfun operator-() const;
    ratfun& operator+=(const ratfun& other);
    ratfun& operator-=(const ratfun& other);
    ratfun& operator*=(const ratfun& other);
    /// Throws algebra_error on division by zero.
    ratfun& operator/=(const ratfun& other);

    friend ratfun operator+(ratfun a, const ratfun& b) { return a += b; }
    friend ratfun operator-(ratfun a, const ratfun& b) { return a -= b; }
    friend ratfun operator*(ratfun a, const ratfun& b) { return a *= b; }
    friend ratfun operator/(ratfun a, const ratfun& b) { return a /= b; }
    friend bool operator==(const ratfun& a, const ratfun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    ratfun inverse() const;
    /// Integer powers; negative n inverts first.
    ratfun pow(int n) const;

    /// z_i -> z_i^{-1}.
    ratfun laurent_dual() const;

    /// Simultaneous substitution of variables by rational functions.
    ratfun substitute(std::span<const std::pair<var, ratfun>> assignments) const;
    ratfun substitute(var v, const ratfun& value) const;

    std::string to_string() const;

private:
    struct coprime_tag {};
    ratfun(poly num, poly den, coprime_tag);

    void canonicalize(bool reduce);

    poly num_;
    poly den_;
};

/// Evaluates a polynomial after substituting rational functions.
ratfun substitute(const poly& p, std::span<const std::pair<var, ratfun>> assignments);

} // namespace extverts
