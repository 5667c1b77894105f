#pragma once

#include "extverts/character.hpp"
#include "extverts/partition.hpp"
#include "extverts/qseries.hpp"

#include <vector>

namespace extverts {

// ---------------------------------------------------------------------------
// Characters of monomial ideals and of the Ext bundle at fixed points.
//
// The monomial x1^a x2^b has weight z1^{-a} z2^{-b}; box (i, j) of a diagram
// is the monomial x1^{j-1} x2^{i-1}.
// ---------------------------------------------------------------------------

/// [O] = 1 / ((1 - z1^{-1})(1 - z2^{-1})).
ratfun structure_sheaf_character();

/// [I_mu] = sum_{i>=1} z1^{-mu_i} z2^{1-i} / (1 - z1^{-1}) in closed form.
ratfun ideal_character(const partition& mu);

/// [E] at (I_lambda, I_mu) as ([O][O]^v - [I_mu][I_lambda]^v) / [O]^v,
/// evaluated with rational-function arithmetic and then extracted.
character ext_character_ratfun(const partition& lambda, const partition& mu);

/// [E] at (I_lambda, I_mu) by the hook formula:
///   sum_{b in mu} z1^{-a_mu(b)} z2^{l_lambda(b)+1} + sum_{b in lambda} z1^{a_lambda(b)+1} z2^{-l_mu(b)}.
character ext_character_hooks(const partition& lambda, const partition& mu);

/// The hook formula obtained with z1 and z2 interchanged in the derivation:
///   sum_{b in mu} z1^{a_lambda(b)+1} z2^{-l_mu(b)} + sum_{b in lambda} z1^{-a_mu(b)} z2^{l_lambda(b)+1}.
character ext_character_hooks_swapped(const partition& lambda, const partition& mu);

/// c -> z1 z2 c^v.
character serre_dual(const character& c);

// ---------------------------------------------------------------------------
// Euler classes.
// ---------------------------------------------------------------------------

/// c_m m + c_1 t1 + c_2 t2.
struct linear_form {
    int m = 0;
    int t1 = 0;
    int t2 = 0;

    bool is_zero() const { return m == 0 && t1 == 0 && t2 == 0; }
    poly to_poly() const;
    friend auto operator<=>(const linear_form&, const linear_form&) = default;
};

/// Product of torus weights. A zero factor is representable but poisoned:
/// dividing by such a product throws.
class weight_product {
public:
    weight_product() = default;
    explicit weight_product(std::vector<linear_form> factors) : factors_(std::move(factors)) {}

    const std::vector<linear_form>& factors() const { return factors_; }
    std::size_t degree() const { return factors_.size(); }
    bool has_zero_factor() const;

    poly value() const;

    json to_json() const;
    std::string to_string() const;

private:
    std::vector<linear_form> factors_;
};

/// Each term z1^a z2^b (with multiplicity) contributes (m [mass_on] + a t1 + b t2).
/// Throws algebra_error on a negative coefficient.
weight_product euler_class(const character& c, bool mass_on);

/// Euler class of the tangent space at I_lambda, the diagonal Ext character
/// without mass. Throws std::logic_error if a weight vanishes.
weight_product tangent_weights(const partition& lambda);

/// numerator / denominator; throws std::domain_error if the denominator has a zero factor.
ratfun divide_by(const ratfun& numerator, const weight_product& denominator);

// ---------------------------------------------------------------------------
// Adjoint-matter instanton partition function.
// ---------------------------------------------------------------------------

/// sum over |lambda| <= order of q^{|lambda|} e_m(E(lambda, lambda)) / e(T_lambda).
/// `threads` = 0 picks the hardware concurrency.
qseries nekrasov_sum(std::size_t order, unsigned threads = 0);

/// -m (m + t1 + t2) / (t1 t2) - 1, the exponent of prod_n (1 - q^n).
ratfun nekrasov_exponent();

/// prod_n (1 - q^n)^{nekrasov_exponent()} to `order`.
qseries nekrasov_product(std::size_t order);

} // namespace extverts
