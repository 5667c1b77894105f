#pragma once

#include "extverts/partition.hpp"
#include "extverts/ratfun.hpp"

namespace extverts {

/// <E^m (E^*)^{θ-m-1} J_lambda, J_mu>_θ as an element of Q(m, θ).
ratfun pieri_lhs(const partition& lambda, const partition& mu);

/// (-1)^{|λ|} θ^{-|λ|-|μ|} prod_{b in λ}(m + a_λ(b) + 1 + θ l_μ(b))
///                          prod_{b in μ}(m - a_μ(b) - θ(l_λ(b) + 1))
ratfun pieri_rhs(const partition& lambda, const partition& mu);

/// pieri_rhs with the two box ranges interchanged: the first product runs
/// over μ and the second over λ.
ratfun pieri_rhs_swapped(const partition& lambda, const partition& mu);

enum class diagram_shape { row, column };

/// Closed forms for single rows (l) and columns (1^k):
///   row:    (E^m, J_(l)) = θ^{-l} prod_{i<l}(m - i),   (E^m p_1, J_(l)) = l θ^{-l} prod_{i<l-1}(m - i)
///   column: (E^m, J_(1^k)) = θ^{-k} prod_{i<k}(m + iθ), (E^m p_1, J_(1^k)) = k θ^{-k} prod_{i<k-1}(m + iθ)
/// Throws std::invalid_argument for size < 1.
ratfun base_case_closed_form(diagram_shape shape, int size, bool with_p1);

} // namespace extverts
