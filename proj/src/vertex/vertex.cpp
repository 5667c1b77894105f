#include "extverts/vertex.hpp"

#include "extverts/jack.hpp"
#include "extverts/parallel.hpp"

namespace extverts {

namespace {

const ratfun& t1t2()
{
    static const ratfun v = ratfun::variable(var::t1) * ratfun::variable(var::t2);
    return v;
}

// coefficient of the creation leg: alpha_{-n}(L) = m p_n
const ratfun& creation_mass()
{
    static const ratfun v = ratfun::variable(var::m);
    return v;
}

// coefficient of the annihilation leg: c1(L - K) = m + t1 + t2
const ratfun& annihilation_mass()
{
    static const ratfun v = ratfun::variable(var::m) + ratfun::variable(var::t1) + ratfun::variable(var::t2);
    return v;
}

void accumulate(z_graded_fock& out, int z, const symfunc& f)
{
    if (f.is_zero())
        return;
    auto& slot = out[z];
    slot += f;
    if (slot.is_zero())
        out.erase(z);
}

} // namespace

const power_sum_pairing& geom_pairing()
{
    static const power_sum_pairing pairing([](int n) {
        ratfun w = t1t2().inverse();
        return n % 2 == 1 ? w : -w;
    });
    return pairing;
}

ratfun geom_inner(const symfunc& f, const symfunc& g)
{
    return geom_pairing()(f, g);
}

symfunc fixed_point_class(const partition& lambda)
{
    const ratfun t1 = ratfun::variable(var::t1), t2 = ratfun::variable(var::t2);
    const std::pair<var, ratfun> theta{var::theta, -t2 / t1};
    const ratfun scale = t2.pow(lambda.size());
    return jack(lambda).map_coeffs([&](const partition& rho, const ratfun& c) {
        return c.substitute(std::span(&theta, 1)) * scale * t1.pow(rho.length());
    });
}

z_graded_fock gamma_apply(const symfunc& v, gamma_leg leg, int degree_cap)
{
    const bool annihilate = leg != gamma_leg::creation;
    const bool create = leg != gamma_leg::annihilation;

    symfunc creation;
    if (create)
        creation = e_operator_power(creation_mass(), degree_cap);

    z_graded_fock out;
    for (int d = 0; d <= v.max_degree(); ++d) {
        symfunc vd = v.degree_component(d);
        if (vd.is_zero())
            continue;

        // Annihilation leg: adjoint of multiplication by exp(sum_n c p_n / n).
        symfunc lowered = vd;
        if (annihilate) {
            symfunc e = exp_power_sums([&](int n) { return annihilation_mass() * ratfun(rational(1, n)); }, d);
            lowered = geom_pairing().apply_dual(e, vd);
        }

        if (!create) {
            for (int k = 0; k <= d; ++k)
                accumulate(out, k - d, lowered.degree_component(k));
            continue;
        }
        for (int k = 0; k <= std::min(d, degree_cap); ++k) {
            symfunc part = lowered.degree_component(k);
            if (part.is_zero())
                continue;
            symfunc raised = multiply(creation, part, degree_cap);
            for (int j = k; j <= degree_cap; ++j)
                accumulate(out, j - d, raised.degree_component(j));
        }
    }
    return out;
}

z_graded w_matrix_element(const partition& lambda, const partition& mu)
{
    symfunc f_mu = fixed_point_class(mu);
    z_graded out;
    for (const auto& [z, component] : gamma_apply(fixed_point_class(lambda), gamma_leg::both, mu.size())) {
        ratfun value = geom_inner(component, f_mu);
        if (!value.is_zero())
            out.emplace(z, std::move(value));
    }
    return out;
}

qseries gamma_trace(std::size_t order, trace_basis basis, unsigned threads)
{
    auto parts = enumerate_up_to(static_cast<int>(order));
    auto diagonal = parallel_map(parts.size(), threads, [&](std::size_t i) -> ratfun {
        const partition& lambda = parts[i];
        if (basis == trace_basis::power_sum) {
            auto image = gamma_apply(symfunc::power_sum(lambda), gamma_leg::both, lambda.size());
            auto it = image.find(0);
            return it == image.end() ? ratfun() : it->second.coeff(lambda);
        }
        symfunc f = fixed_point_class(lambda);
        auto image = gamma_apply(f, gamma_leg::both, lambda.size());
        auto it = image.find(0);
        if (it == image.end())
            return ratfun();
        return geom_inner(it->second, f) / geom_inner(f, f);
    });

    qseries out(order);
    for (std::size_t i = 0; i < parts.size(); ++i)
        out[static_cast<std::size_t>(parts[i].size())] += diagonal[i];
    return out;
}

} // namespace extverts
