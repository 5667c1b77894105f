#pragma once

#include "extverts/qseries.hpp"
#include "extverts/symfunc.hpp"

#include <map>

namespace extverts {

// Fock space of Hilb(C^2, n) in the power-sum picture: the Nakajima
// operator a_{-n}(1) is multiplication by p_n, the vacuum is 1, and
// vectors carry coefficients in Q(t1, t2, m).

/// Geometric pairing on the Fock space: <p_lambda, p_mu> = delta z_lambda
/// prod_i (-1)^{lambda_i - 1} / (t1 t2), the normalization of the Nakajima
/// commutator [a_n, a_{-n}] = (-1)^{n-1} n / (t1 t2).
const power_sum_pairing& geom_pairing();
ratfun geom_inner(const symfunc& f, const symfunc& g);

/// The fixed-point class [I_lambda] = t2^{|lambda|} J_lambda |_{θ = -t2/t1, p_i -> t1 p_i}.
symfunc fixed_point_class(const partition& lambda);

enum class gamma_leg { creation, annihilation, both };

/// Fock vectors graded by the bookkeeping power of z.
using z_graded_fock = std::map<int, symfunc>;
/// Scalars graded by the bookkeeping power of z.
using z_graded = std::map<int, ratfun>;

/// Gamma = exp(-sum_n (-z)^n/n m p_n) exp(sum_n z^{-n}/n (m+t1+t2) p_n^*)
/// applied to v, keeping output degrees <= degree_cap. The creation leg
/// contributes z^{+n} per unit of degree added and the annihilation leg
/// z^{-n} per unit removed. `leg` selects one factor or both.
z_graded_fock gamma_apply(const symfunc& v, gamma_leg leg, int degree_cap);

/// <Gamma f_lambda, f_mu> under the geometric pairing, zero entries dropped.
z_graded w_matrix_element(const partition& lambda, const partition& mu);

enum class trace_basis { power_sum, fixed_point };

/// sum_n q^n tr(Gamma restricted to degree n), z^0 part. In the power-sum
/// basis the diagonal coefficient of p_lambda in Gamma p_lambda is used;
/// in the fixed-point basis <Gamma f, f> / <f, f>.
qseries gamma_trace(std::size_t order, trace_basis basis = trace_basis::power_sum, unsigned threads = 0);

} // namespace extverts
