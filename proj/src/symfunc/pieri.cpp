#include "extverts/pieri.hpp"

#include "extverts/jack.hpp"

#include <stdexcept>

namespace extverts {

namespace {

const ratfun& m_var()
{
    static const ratfun v = ratfun::variable(var::m);
    return v;
}

const ratfun& theta_var()
{
    static const ratfun v = ratfun::variable(var::theta);
    return v;
}

ratfun prefactor(const partition& lambda, const partition& mu)
{
    ratfun sign(lambda.size() % 2 == 0 ? 1 : -1);
    return sign * theta_var().pow(-(lambda.size() + mu.size()));
}

// m + a_x(b) + 1 + θ l_y(b)
poly upper_factor(const partition& x, const partition& y, box b)
{
    return poly::variable(var::m) + poly(arm(x, b) + 1) + poly::variable(var::theta) * rational(leg(y, b));
}

// m - a_y(b) - θ (l_x(b) + 1)
poly lower_factor(const partition& x, const partition& y, box b)
{
    return poly::variable(var::m) - poly(arm(y, b)) - poly::variable(var::theta) * rational(leg(x, b) + 1);
}

} // namespace

ratfun pieri_lhs(const partition& lambda, const partition& mu)
{
    const symfunc j_lambda = jack(lambda);
    const symfunc j_mu = jack(mu);

    // (E^*)^{θ-m-1} J_λ occupies degrees 0..|λ|.
    ratfun s = theta_var() - m_var() - ratfun(1);
    symfunc lowered = apply_dual(e_operator_power(s, lambda.size()), j_lambda);

    symfunc raised = multiply(e_operator_power(m_var(), mu.size()), lowered, mu.size()).degree_component(mu.size());
    return jack_inner(raised, j_mu);
}

ratfun pieri_rhs(const partition& lambda, const partition& mu)
{
    poly product(1);
    for (box b : lambda.boxes())
        product *= upper_factor(lambda, mu, b);
    for (box b : mu.boxes())
        product *= lower_factor(lambda, mu, b);
    return prefactor(lambda, mu) * ratfun(product);
}

ratfun pieri_rhs_swapped(const partition& lambda, const partition& mu)
{
    poly product(1);
    for (box b : mu.boxes())
        product *= upper_factor(lambda, mu, b);
    for (box b : lambda.boxes())
        product *= lower_factor(lambda, mu, b);
    return prefactor(lambda, mu) * ratfun(product);
}

ratfun base_case_closed_form(diagram_shape shape, int size, bool with_p1)
{
    if (size < 1)
        throw std::invalid_argument("base case needs a diagram of size >= 1");
    int factors = with_p1 ? size - 1 : size;
    poly product(with_p1 ? size : 1);
    for (int i = 0; i < factors; ++i) {
        if (shape == diagram_shape::row)
            product *= poly::variable(var::m) - poly(i);
        else
            product *= poly::variable(var::m) + poly::variable(var::theta) * rational(i);
    }
    return ratfun(product) * theta_var().pow(-size);
}

} // namespace extverts
