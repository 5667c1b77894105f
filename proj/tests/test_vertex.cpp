#include "oracles.hpp"

#include "extverts/geometry.hpp"
#include "extverts/vertex.hpp"

#include <doctest.h>

#include <random>

using namespace extverts;

namespace {

const ratfun m = ratfun::variable(var::m);
const ratfun t1 = ratfun::variable(var::t1);
const ratfun t2 = ratfun::variable(var::t2);

symfunc p(std::initializer_list<int> parts, const ratfun& c = ratfun(1))
{
    return symfunc::power_sum(partition(parts), c);
}

ratfun euler_m(const partition& lambda, const partition& mu)
{
    return ratfun(euler_class(ext_character_hooks(lambda, mu), true).value());
}

// (n / (t1 t2)) d/dp_n applied termwise, with the sign (-1)^{n-1}
symfunc lowered(int n, const symfunc& g)
{
    symfunc out;
    for (const auto& [rho, c] : g.terms()) {
        auto rest = rho.remove(partition{n});
        if (!rest)
            continue;
        int mult = rho.multiplicities().at(n);
        ratfun sign(n % 2 == 1 ? 1 : -1);
        out.add_term(*rest, c * ratfun(n * mult) * sign / (t1 * t2));
    }
    return out;
}

} // namespace

TEST_CASE("geometric pairing examples")
{
    CHECK(geom_inner(symfunc(ratfun(1)), symfunc(ratfun(1))) == ratfun(1));
    CHECK(geom_inner(p({1}), p({1})) == (t1 * t2).inverse());
    CHECK(geom_inner(p({1}, t1 * t2), p({1}, t1 * t2)) == t1 * t2);
    CHECK(geom_inner(p({2}), p({2})) == ratfun(-2) / (t1 * t2));
    CHECK(geom_inner(p({2}), p({1, 1})).is_zero());
}

TEST_CASE("adjointness of p_n under the geometric pairing")
{
    std::mt19937 rng(11);
    auto random_sym = [&](int degree) {
        symfunc f;
        std::uniform_int_distribution<int> c(-2, 2);
        for (int d = 0; d <= degree; ++d)
            for (const auto& rho : enumerate(d))
                if (int k = c(rng); k != 0)
                    f.add_term(rho, ratfun(k) * (rng() % 2 ? m + t1 : ratfun(1)));
        return f;
    };
    for (int iter = 0; iter < 10; ++iter)
        for (int n = 1; n <= 3; ++n) {
            symfunc f = random_sym(3), g = random_sym(3 + n);
            CHECK(geom_inner(p({n}) * f, g) == geom_inner(f, lowered(n, g)));
            CHECK(geom_inner(p({n}) * f, g) == geom_inner(f, geom_pairing().apply_dual(p({n}), g)));
        }
}

TEST_CASE("fixed-point classes")
{
    CHECK(fixed_point_class(partition{}) == symfunc(ratfun(1)));
    CHECK(fixed_point_class(partition{1}) == p({1}, t1 * t2));
    CHECK(fixed_point_class(partition{1, 1}) == (p({1, 1}, t1 * t1) - p({2}, t1)) * (t2 * t2));
    // with the Jack coefficients written out: J_(2) = p1^2 + p2/θ, θ = -t2/t1
    CHECK(fixed_point_class(partition{2}) == (p({1, 1}, t1 * t1) - p({2}, t1 * t1 / t2)) * (t2 * t2));
}

TEST_CASE("norm bridge: <f_lambda, f_lambda> = tangent Euler class, |lambda| <= 4")
{
    for (const auto& lambda : enumerate_up_to(4)) {
        symfunc f = fixed_point_class(lambda);
        CHECK_MESSAGE(geom_inner(f, f) == ratfun(tangent_weights(lambda).value()), lambda.to_string());
    }
}

TEST_CASE("the norm bridge needs the sign in the pairing")
{
    power_sum_pairing unsigned_pairing([](int) { return (t1 * t2).inverse(); });
    symfunc f = fixed_point_class(partition{2});
    CHECK(unsigned_pairing(f, f) != ratfun(tangent_weights(partition{2}).value()));
}

TEST_CASE("gamma_apply examples")
{
    auto image = gamma_apply(symfunc(ratfun(1)), gamma_leg::both, 2);
    CHECK(image.at(1) == p({1}, m));
    CHECK(image.at(0) == symfunc(ratfun(1)));
    CHECK(gamma_apply(symfunc(ratfun(1)), gamma_leg::annihilation, 2).at(0) == symfunc(ratfun(1)));

    auto lower = gamma_apply(fixed_point_class(partition{1}), gamma_leg::annihilation, 1);
    CHECK(lower.at(-1) == symfunc((m + t1 + t2)));
    CHECK(lower.at(0) == fixed_point_class(partition{1}));

    auto creation = gamma_apply(symfunc(ratfun(1)), gamma_leg::creation, 3);
    CHECK(creation.at(3) == e_operator_power(m, 3).degree_component(3));
}

TEST_CASE("matrix element examples")
{
    const partition empty, one{1};
    CHECK(w_matrix_element(empty, empty) == z_graded{{0, ratfun(1)}});
    CHECK(w_matrix_element(empty, one) == z_graded{{1, m}});
    CHECK(w_matrix_element(one, empty) == z_graded{{-1, m + t1 + t2}});
    CHECK(w_matrix_element(one, one) == z_graded{{0, (m + t1) * (m + t2)}});
}

TEST_CASE("matrix elements: single z-power |mu|-|lambda| carrying the Euler class, |lambda|, |mu| <= 3")
{
    for (const auto& lambda : enumerate_up_to(3))
        for (const auto& mu : enumerate_up_to(3)) {
            z_graded w = w_matrix_element(lambda, mu);
            REQUIRE(w.size() == 1);
            CHECK(w.begin()->first == mu.size() - lambda.size());
            CHECK(w.begin()->second == euler_m(lambda, mu));
        }
}

TEST_CASE("Serre relation of matrix elements, |lambda|, |mu| <= 3")
{
    const std::pair<var, ratfun> reflect{var::m, -t1 - t2 - m};
    for (const auto& lambda : enumerate_up_to(3))
        for (const auto& mu : enumerate_up_to(3)) {
            z_graded a = w_matrix_element(lambda, mu), b = w_matrix_element(mu, lambda);
            z_graded reflected;
            ratfun sign((lambda.size() + mu.size()) % 2 ? -1 : 1);
            for (const auto& [z, v] : b)
                reflected.emplace(-z, v.substitute(std::span(&reflect, 1)) * sign);
            CHECK(a == reflected);
        }
}

TEST_CASE("trace")
{
    qseries tr = gamma_trace(4, trace_basis::power_sum, 2);
    CHECK(tr[0] == ratfun(1));
    CHECK(tr[1] == (m + t1) * (m + t2) / (t1 * t2));
    CHECK(tr == nekrasov_product(4));
    CHECK(gamma_trace(4, trace_basis::fixed_point, 2) == tr);
    CHECK(gamma_trace(3, trace_basis::power_sum, 1) == gamma_trace(3, trace_basis::power_sum, 3));
}
