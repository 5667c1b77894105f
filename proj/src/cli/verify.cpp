#include "extverts/verify.hpp"

#include "extverts/geometry.hpp"
#include "extverts/parallel.hpp"
#include "extverts/pieri.hpp"
#include "extverts/vertex.hpp"

#include <chrono>

namespace extverts {

namespace {

constexpr int serre_matrix_limit = 3;

// Display form; the empty partition needs a visible token.
std::string label(const partition& p)
{
    return p.empty() ? "0" : p.to_string();
}

struct pair_case {
    partition lambda;
    partition mu;
};

std::vector<pair_case> pair_cases(const verify_options& o)
{
    if (o.lambda && o.mu)
        return {{*o.lambda, *o.mu}};
    auto parts = enumerate_up_to(o.max_size);
    std::vector<pair_case> out;
    out.reserve(parts.size() * parts.size());
    for (const auto& l : parts)
        for (const auto& m : parts)
            out.push_back({l, m});
    return out;
}

bool fault_at(const verify_options& o, const std::string& id)
{
    if (!o.inject_fault)
        return false;
    const std::string& f = *o.inject_fault;
    if (f == id)
        return true;
    auto colon = f.find(':');
    auto id_colon = id.find(':');
    if (colon == std::string::npos || id_colon == std::string::npos)
        return false;
    try {
        return parse_partition(f.substr(0, colon)) == parse_partition(id.substr(0, id_colon)) &&
               parse_partition(f.substr(colon + 1)) == parse_partition(id.substr(id_colon + 1));
    } catch (const std::exception&) {
        return false;
    }
}

std::string rerun_command(const verify_options& o, const std::string& extra)
{
    std::string cmd = "extverts verify " + std::string(suite_name(o.suite)) + " " + extra;
    if (o.inject_fault)
        cmd += " --inject-fault " + *o.inject_fault;
    return cmd;
}

case_result make_case(const pair_case& c)
{
    case_result r;
    r.lambda = label(c.lambda);
    r.mu = label(c.mu);
    r.key = r.lambda + "|" + r.mu;
    return r;
}

json rerun_for(const verify_options& o, const pair_case& c)
{
    return rerun_command(o, "--lambda " + label(c.lambda) + " --mu " + label(c.mu));
}

json ratfun_witness(const ratfun& lhs, const ratfun& rhs)
{
    ratfun diff = lhs - rhs;
    return {{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}, {"difference", to_json(diff)},
            {"lhs_text", lhs.to_string()}, {"rhs_text", rhs.to_string()}, {"difference_text", diff.to_string()}};
}

json character_witness(const character& lhs, const character& rhs)
{
    character diff = lhs - rhs;
    return {{"lhs", lhs.to_json()}, {"rhs", rhs.to_json()}, {"difference", diff.to_json()},
            {"lhs_text", lhs.to_string()}, {"rhs_text", rhs.to_string()}, {"difference_text", diff.to_string()}};
}

void finish_ratfun(case_result& r, const ratfun& lhs, const ratfun& rhs, const json& rerun)
{
    r.pass = lhs == rhs;
    if (!r.pass) {
        r.detail = "difference " + (lhs - rhs).to_string();
        r.witness = ratfun_witness(lhs, rhs);
        r.witness["rerun"] = rerun;
    }
}

case_result check_pieri(const verify_options& o, const pair_case& c)
{
    case_result r = make_case(c);
    ratfun lhs = pieri_lhs(c.lambda, c.mu);
    if (fault_at(o, r.lambda + ":" + r.mu))
        lhs += ratfun(1);
    finish_ratfun(r, lhs, pieri_rhs(c.lambda, c.mu), rerun_for(o, c));
    return r;
}

case_result check_character(const verify_options& o, const pair_case& c)
{
    case_result r = make_case(c);
    character lhs = ext_character_ratfun(c.lambda, c.mu);
    if (fault_at(o, r.lambda + ":" + r.mu))
        lhs.add(0, 0);
    character rhs = ext_character_hooks(c.lambda, c.mu);
    const std::int64_t expected_mass = c.lambda.size() + c.mu.size();
    bool agree = lhs == rhs;
    bool mass_ok = lhs.mass() == expected_mass;
    bool nonneg = lhs.is_nonnegative();
    r.pass = agree && mass_ok && nonneg;
    if (!r.pass) {
        if (!agree)
            r.detail = "routes differ by " + (lhs - rhs).to_string();
        else if (!mass_ok)
            r.detail = "mass " + std::to_string(lhs.mass()) + ", expected " + std::to_string(expected_mass);
        else
            r.detail = "negative coefficient";
        r.witness = character_witness(lhs, rhs);
        r.witness["mass"] = lhs.mass();
        r.witness["expected_mass"] = expected_mass;
        r.witness["rerun"] = rerun_for(o, c);
    }
    return r;
}

// w(lambda, mu; m) = (-1)^{|lambda|+|mu|} w(mu, lambda; -t1-t2-m) with z -> 1/z.
z_graded serre_reflect(const z_graded& w, int sign_power)
{
    const std::pair<var, ratfun> sub{var::m, -ratfun::variable(var::t1) - ratfun::variable(var::t2) -
                                                 ratfun::variable(var::m)};
    z_graded out;
    ratfun sign(sign_power % 2 == 0 ? 1 : -1);
    for (const auto& [z, v] : w)
        out.emplace(-z, v.substitute(std::span(&sub, 1)) * sign);
    return out;
}

json z_graded_json(const z_graded& w)
{
    json out = json::array();
    for (const auto& [z, v] : w)
        out.push_back({{"zpower", z}, {"value", to_json(v)}, {"text", v.to_string()}});
    return out;
}

case_result check_serre(const verify_options& o, const pair_case& c)
{
    case_result r = make_case(c);
    character lhs = ext_character_hooks(c.lambda, c.mu);
    if (fault_at(o, r.lambda + ":" + r.mu))
        lhs.add(0, 0);
    character rhs = serre_dual(ext_character_hooks(c.mu, c.lambda));
    r.pass = lhs == rhs;
    if (!r.pass) {
        r.detail = "character level: difference " + (lhs - rhs).to_string();
        r.witness = character_witness(lhs, rhs);
        r.witness["rerun"] = rerun_for(o, c);
        return r;
    }
    if (c.lambda.size() > serre_matrix_limit || c.mu.size() > serre_matrix_limit)
        return r;
    z_graded w = w_matrix_element(c.lambda, c.mu);
    z_graded reflected = serre_reflect(w_matrix_element(c.mu, c.lambda), c.lambda.size() + c.mu.size());
    r.pass = w == reflected;
    if (!r.pass) {
        r.detail = "matrix-element level mismatch";
        r.witness = {{"lhs", z_graded_json(w)}, {"rhs", z_graded_json(reflected)}, {"rerun", rerun_for(o, c)}};
    }
    return r;
}

// Euler class of Ext at t1 = 1, t2 = -θ, with the sign and θ-power that
// relate it to the Pieri right-hand side, against the Jack-side evaluation.
case_result check_bridge(const verify_options& o, const pair_case& c)
{
    case_result r = make_case(c);
    const ratfun theta = ratfun::variable(var::theta);
    const std::pair<var, ratfun> specialization[] = {{var::t1, ratfun(1)}, {var::t2, -theta}};
    ratfun euler(euler_class(ext_character_hooks(c.lambda, c.mu), true).value());
    ratfun prefactor = theta.pow(-(c.lambda.size() + c.mu.size())) * ratfun(c.lambda.size() % 2 == 0 ? 1 : -1);
    ratfun lhs = euler.substitute(specialization) * prefactor;
    if (fault_at(o, r.lambda + ":" + r.mu))
        lhs += ratfun(1);
    finish_ratfun(r, lhs, pieri_lhs(c.lambda, c.mu), rerun_for(o, c));
    return r;
}

case_result check_theorem(const verify_options& o, const pair_case& c)
{
    case_result r = make_case(c);
    z_graded lhs = w_matrix_element(c.lambda, c.mu);
    if (fault_at(o, r.lambda + ":" + r.mu))
        lhs[0] += ratfun(1);
    z_graded rhs;
    ratfun euler(euler_class(ext_character_hooks(c.lambda, c.mu), true).value());
    if (!euler.is_zero())
        rhs.emplace(c.mu.size() - c.lambda.size(), euler);
    r.pass = lhs == rhs;
    if (!r.pass) {
        r.detail = "matrix element differs from the mass-twisted Euler class";
        r.witness = {{"lhs", z_graded_json(lhs)}, {"rhs", z_graded_json(rhs)}, {"rerun", rerun_for(o, c)}};
    }
    return r;
}

report run_pairs(const verify_options& o, case_result (*check)(const verify_options&, const pair_case&))
{
    auto cases = pair_cases(o);
    report rep;
    rep.cases = parallel_map(cases.size(), o.threads, [&](std::size_t i) { return check(o, cases[i]); });
    return rep;
}

report run_trace(const verify_options& o)
{
    const std::size_t order = static_cast<std::size_t>(o.order.value_or(o.max_size));
    qseries sum = nekrasov_sum(order, o.threads);
    qseries product = nekrasov_product(order);
    qseries trace = gamma_trace(order, trace_basis::power_sum, o.threads);

    report rep;
    for (std::size_t n = 0; n <= order; ++n) {
        case_result r;
        r.key = "q^" + std::to_string(n);
        ratfun s = sum[n];
        if (fault_at(o, r.key))
            s += ratfun(1);
        const ratfun& p = product[n];
        const ratfun& t = trace[n];
        r.pass = s == p && p == t;
        if (!r.pass) {
            r.detail = s != p ? "sum and product differ" : "product and trace differ";
            r.witness = {{"sum", to_json(s)},
                         {"product", to_json(p)},
                         {"trace", to_json(t)},
                         {"sum_text", s.to_string()},
                         {"product_text", p.to_string()},
                         {"trace_text", t.to_string()},
                         {"rerun", rerun_command(o, "--order " + std::to_string(n))}};
        } else {
            r.detail = s.to_string();
        }
        rep.cases.push_back(std::move(r));
    }
    return rep;
}

} // namespace

std::optional<verify_suite> suite_from_name(std::string_view name)
{
    for (auto s : {verify_suite::pieri, verify_suite::character, verify_suite::serre, verify_suite::bridge,
                   verify_suite::theorem, verify_suite::trace})
        if (suite_name(s) == name)
            return s;
    return std::nullopt;
}

std::string_view suite_name(verify_suite suite)
{
    switch (suite) {
    case verify_suite::pieri: return "pieri";
    case verify_suite::character: return "character";
    case verify_suite::serre: return "serre";
    case verify_suite::bridge: return "bridge";
    case verify_suite::theorem: return "theorem";
    case verify_suite::trace: return "trace";
    }
    return "?";
}

report run_verify(const verify_options& o)
{
    auto start = std::chrono::steady_clock::now();
    report rep;
    switch (o.suite) {
    case verify_suite::pieri: rep = run_pairs(o, check_pieri); break;
    case verify_suite::character: rep = run_pairs(o, check_character); break;
    case verify_suite::serre: rep = run_pairs(o, check_serre); break;
    case verify_suite::bridge: rep = run_pairs(o, check_bridge); break;
    case verify_suite::theorem: rep = run_pairs(o, check_theorem); break;
    case verify_suite::trace: rep = run_trace(o); break;
    }
    rep.command = "verify " + std::string(suite_name(o.suite));
    rep.parameters = {{"suite", suite_name(o.suite)}, {"max_size", o.max_size}};
    if (o.suite == verify_suite::trace)
        rep.parameters["order"] = o.order.value_or(o.max_size);
    if (o.lambda && o.mu) {
        rep.parameters["lambda"] = label(*o.lambda);
        rep.parameters["mu"] = label(*o.mu);
    }
    if (o.inject_fault)
        rep.parameters["inject_fault"] = *o.inject_fault;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace extverts
