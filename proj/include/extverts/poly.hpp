#pragma once

#include "extverts/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extverts {

// Global indeterminate registry. The slot order is also the lexicographic
// variable order used for leading terms.
enum class var : std::uint8_t { t1, t2, m, theta, q, z1, z2 };

inline constexpr std::size_t num_vars = 7;
inline constexpr std::array<var, num_vars> all_vars{var::t1, var::t2, var::m, var::theta,
                                                    var::q,  var::z1, var::z2};

constexpr std::size_t index(var v) { return static_cast<std::size_t>(v); }

/// Character variables admit negative exponents.
constexpr bool is_laurent(var v) { return v == var::z1 || v == var::z2; }

/// Display name ("θ" for theta).
std::string_view var_name(var v);
/// Accepts display names plus the ASCII alias "theta".
std::optional<var> var_from_name(std::string_view name);

using exponents = std::array<std::int16_t, num_vars>;

struct term {
    exponents exps{};
    rational coeff;
};

/// Sparse multivariate polynomial over Q in the registry variables.
///
/// Terms are kept sorted strictly decreasing in lex order with no zero
/// coefficients, so structural equality is mathematical equality. Negative
/// exponents are only meaningful for the Laurent variables z1, z2.
class poly {
public:
    poly() = default;
    poly(const rational& c);
    poly(long c) : poly(rational(c)) {}

    static poly variable(var v, int power = 1);
    static poly monomial(const exponents& e, const rational& c);
    /// Sorts, merges equal exponents and drops zeros.
    static poly from_terms(std::vector<term> terms);

    const std::vector<term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Requires is_constant().
    rational constant_value() const;

    const term& leading_term() const { return terms_.front(); }
    const rational& leading_coeff() const { return terms_.front().coeff; }

    int degree(var v) const;
    int min_degree(var v) const;
    bool depends_on(var v) const;
    /// Largest total degree over all terms (0 for the zero polynomial).
    int total_degree() const;

    /// Componentwise minimum exponent (zero vector for the zero polynomial).
    exponents min_exponents() const;
    /// Multiplies by the monomial with the given exponent vector.
    poly shifted(const exponents& delta) const;

    poly operator-() const;
    poly& operator+=(const poly& other);
    poly& operator-=(const poly& other);
    poly& operator*=(const poly& other);
    poly& operator*=(const rational& c);

    friend poly operator+(poly a, const poly& b) { return a += b; }
    friend poly operator-(poly a, const poly& b) { return a -= b; }
    friend poly operator*(const poly& a, const poly& b);
    friend poly operator*(poly a, const rational& c) { return a *= c; }
    friend bool operator==(const poly& a, const poly& b);

    poly pow(unsigned n) const;

    /// Replaces z_i by z_i^{-1} for the Laurent variables.
    poly laurent_dual() const;

    /// Scales so the leading coefficient is 1 (zero stays zero).
    poly monic() const;

    /// Evaluation of every variable at a rational point. Negative exponents
    /// require nonzero values.
    rational evaluate(const std::array<rational, num_vars>& point) const;

    std::string to_string() const;

private:
    std::vector<term> terms_;
};

struct division_result {
    poly quotient;
    poly remainder;
};

/// Multivariate division by leading terms in lex order; terms of the dividend
/// whose leading monomial is not divisible go to the remainder.
division_result divide(const poly& a, const poly& b);

/// Quotient when b divides a exactly (in the Laurent sense for z1, z2),
/// std::nullopt otherwise. Throws on b == 0.
std::optional<poly> divide_exact(const poly& a, const poly& b);

/// Greatest common divisor, normalized monic. Monomials in z1, z2 are units
/// and never appear in the result; monomial content in the other variables
/// does. gcd(0, 0) = 0.
poly gcd(const poly& a, const poly& b);

} // namespace extverts
