#include "extverts/geometry.hpp"

#include "extverts/parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace extverts {

namespace {

poly z_monomial(int e1, int e2)
{
    exponents e{};
    e[index(var::z1)] = static_cast<std::int16_t>(e1);
    e[index(var::z2)] = static_cast<std::int16_t>(e2);
    return poly::monomial(e, 1);
}

// (1 - z1^{-1})(1 - z2^{-1})
poly structure_denominator()
{
    return (poly(1) - z_monomial(-1, 0)) * (poly(1) - z_monomial(0, -1));
}

} // namespace

ratfun structure_sheaf_character()
{
    return ratfun(poly(1), structure_denominator());
}

ratfun ideal_character(const partition& mu)
{
    // finite rows plus the geometric tail sum_{i > l} z2^{1-i} = z2^{-l} / (1 - z2^{-1}),
    // everything over (1 - z1^{-1})(1 - z2^{-1})
    poly num;
    poly tail_factor = poly(1) - z_monomial(0, -1);
    for (int i = 1; i <= mu.length(); ++i)
        num += z_monomial(-mu.part(i), 1 - i) * tail_factor;
    num += z_monomial(0, -mu.length());
    return ratfun(num, structure_denominator());
}

character ext_character_ratfun(const partition& lambda, const partition& mu)
{
    ratfun o = structure_sheaf_character();
    ratfun o_dual = o.laurent_dual();
    ratfun i_lambda_dual = ideal_character(lambda).laurent_dual();
    ratfun i_mu = ideal_character(mu);
    ratfun e = (o * o_dual - i_mu * i_lambda_dual) / o_dual;
    return laurent_extract(e);
}

character ext_character_hooks(const partition& lambda, const partition& mu)
{
    character c;
    for (box b : mu.boxes())
        c.add(-arm(mu, b), leg(lambda, b) + 1);
    for (box b : lambda.boxes())
        c.add(arm(lambda, b) + 1, -leg(mu, b));
    return c;
}

character ext_character_hooks_swapped(const partition& lambda, const partition& mu)
{
    character c;
    for (box b : mu.boxes())
        c.add(arm(lambda, b) + 1, -leg(mu, b));
    for (box b : lambda.boxes())
        c.add(-arm(mu, b), leg(lambda, b) + 1);
    return c;
}

character serre_dual(const character& c)
{
    return c.dual().shifted(1, 1);
}

poly linear_form::to_poly() const
{
    return poly::variable(var::m) * rational(m) + poly::variable(var::t1) * rational(t1) +
           poly::variable(var::t2) * rational(t2);
}

bool weight_product::has_zero_factor() const
{
    for (const auto& f : factors_)
        if (f.is_zero())
            return true;
    return false;
}

poly weight_product::value() const
{
    poly p(1);
    for (const auto& f : factors_)
        p *= f.to_poly();
    return p;
}

json weight_product::to_json() const
{
    json out = json::array();
    for (const auto& f : factors_)
        out.push_back({{"m", f.m}, {"t1", f.t1}, {"t2", f.t2}});
    return out;
}

std::string weight_product::to_string() const
{
    if (factors_.empty())
        return "1";
    std::ostringstream out;
    for (const auto& f : factors_)
        out << "(" << f.to_poly().to_string() << ")";
    return out.str();
}

weight_product euler_class(const character& c, bool mass_on)
{
    std::vector<linear_form> factors;
    for (const auto& [w, mult] : c.terms()) {
        if (mult < 0)
            throw algebra_error("Euler class of a character with negative coefficient: " + c.to_string());
        for (std::int64_t k = 0; k < mult; ++k)
            factors.push_back({mass_on ? 1 : 0, w.first, w.second});
    }
    return weight_product(std::move(factors));
}

weight_product tangent_weights(const partition& lambda)
{
    weight_product w = euler_class(ext_character_hooks(lambda, lambda), false);
    if (w.has_zero_factor())
        throw std::logic_error("zero tangent weight at fixed point " + lambda.to_string());
    return w;
}

ratfun divide_by(const ratfun& numerator, const weight_product& denominator)
{
    if (denominator.has_zero_factor())
        throw std::domain_error("division by a weight product with a zero factor: " + denominator.to_string());
    return numerator / ratfun(denominator.value());
}

qseries nekrasov_sum(std::size_t order, unsigned threads)
{
    auto parts = enumerate_up_to(static_cast<int>(order));
    auto terms = parallel_map(parts.size(), threads, [&](std::size_t i) {
        const partition& lambda = parts[i];
        ratfun mass_twisted(euler_class(ext_character_hooks(lambda, lambda), true).value());
        return divide_by(mass_twisted, tangent_weights(lambda));
    });

    // Each degree is reduced independently.
    auto sums = parallel_map(order + 1, threads, [&](std::size_t n) {
        ratfun s;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (static_cast<std::size_t>(parts[i].size()) == n)
                s += terms[i];
        return s;
    });
    return qseries(order, std::move(sums));
}

ratfun nekrasov_exponent()
{
    ratfun m = ratfun::variable(var::m), t1 = ratfun::variable(var::t1), t2 = ratfun::variable(var::t2);
    return -(m * (m + t1 + t2)) / (t1 * t2) - ratfun(1);
}

qseries nekrasov_product(std::size_t order)
{
    return pow(euler_product(order), nekrasov_exponent());
}

} // namespace extverts
