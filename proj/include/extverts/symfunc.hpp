#pragma once

#include "extverts/partition.hpp"
#include "extverts/ratfun.hpp"

#include <functional>
#include <map>
#include <string>

namespace extverts {

/// Symmetric function in the power-sum basis: sum of c_lambda * p_lambda
/// with rational-function coefficients. No zero coefficients are stored.
class symfunc {
public:
    using term_map = std::map<partition, ratfun>;

    symfunc() = default;
    symfunc(const ratfun& constant);

    static symfunc power_sum(const partition& lambda, const ratfun& coeff = ratfun(1));

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    ratfun coeff(const partition& lambda) const;
    /// Largest |lambda| with a nonzero coefficient (-1 for zero).
    int max_degree() const;

    void add_term(const partition& lambda, const ratfun& coeff);

    symfunc& operator+=(const symfunc& other);
    symfunc& operator-=(const symfunc& other);
    symfunc& operator*=(const ratfun& c);
    friend symfunc operator+(symfunc a, const symfunc& b) { return a += b; }
    friend symfunc operator-(symfunc a, const symfunc& b) { return a -= b; }
    friend symfunc operator*(symfunc a, const ratfun& c) { return a *= c; }
    friend symfunc operator*(const symfunc& a, const symfunc& b);
    friend bool operator==(const symfunc& a, const symfunc& b) { return a.terms_ == b.terms_; }

    symfunc degree_component(int degree) const;
    symfunc truncated(int degree_cap) const;

    /// Applies f to every coefficient (dropping those that become zero).
    symfunc map_coeffs(const std::function<ratfun(const partition&, const ratfun&)>& f) const;
    symfunc substitute(std::span<const std::pair<var, ratfun>> assignments) const;

    /// "p1^2 + (1/θ)·p2", terms ordered by increasing lexicographic index.
    std::string to_string() const;

private:
    term_map terms_;
};

/// Product truncated to total degree <= degree_cap.
symfunc multiply(const symfunc& a, const symfunc& b, int degree_cap);

/// Diagonal pairing on power sums: <p_lambda, p_mu> = delta z_lambda prod_i w(lambda_i).
class power_sum_pairing {
public:
    explicit power_sum_pairing(std::function<ratfun(int)> weight) : weight_(std::move(weight)) {}

    ratfun weight(int n) const { return weight_(n); }
    ratfun norm(const partition& lambda) const;
    ratfun operator()(const symfunc& f, const symfunc& g) const;

    /// Adjoint of multiplication by f, applied to g: <f h, g> = <h, apply_dual(f, g)>.
    /// The adjoint of p_n is n w(n) d/dp_n.
    symfunc apply_dual(const symfunc& f, const symfunc& g) const;

private:
    std::function<ratfun(int)> weight_;
};

/// The Jack pairing: p_k^* = (k/θ) d/dp_k, i.e. <p_lambda, p_lambda> = z_lambda θ^{-l(lambda)}.
const power_sum_pairing& jack_pairing();

ratfun jack_inner(const symfunc& f, const symfunc& g);
symfunc apply_dual(const symfunc& f, const symfunc& g);

/// Monomial symmetric function m_lambda in the power-sum basis.
symfunc monomial_sym(const partition& lambda);

/// Coefficient of m_lambda in p_mu: the number of ways to distribute the
/// parts of mu into |lambda|'s rows with row sums lambda_j.
integer power_to_monomial(const partition& mu, const partition& lambda);

/// exp(sum_n a(n) p_n) through total degree degree_cap.
symfunc exp_power_sums(const std::function<ratfun(int)>& a, int degree_cap);

/// E^s with E = 1 + e_1 + e_2 + ... = exp(sum_n (-1)^{n-1} p_n / n), through degree_cap.
symfunc e_operator_power(const ratfun& s, int degree_cap);

} // namespace extverts
