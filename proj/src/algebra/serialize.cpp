#include "extverts/serialize.hpp"

namespace extverts {

json to_json(const rational& r)
{
    return to_string(r);
}

rational rational_from_json(const json& j)
{
    if (!j.is_string())
        throw algebra_error("rational must be a \"p/q\" string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

json to_json(const poly& p)
{
    json vars = json::array();
    for (var v : all_vars)
        vars.push_back(std::string(var_name(v)));
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json exps = json::array();
        for (auto e : t.exps)
            exps.push_back(e);
        terms.push_back({{"exps", exps}, {"coeff", to_json(t.coeff)}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

poly poly_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("terms"))
        throw algebra_error("polynomial JSON needs a \"terms\" array");
    if (j.contains("vars")) {
        const auto& vars = j.at("vars");
        if (!vars.is_array() || vars.size() != num_vars)
            throw algebra_error("polynomial JSON has wrong variable arity");
        for (std::size_t i = 0; i < num_vars; ++i)
            if (vars[i] != std::string(var_name(all_vars[i])))
                throw algebra_error("polynomial JSON variable order mismatch at slot " + std::to_string(i));
    }
    std::vector<term> terms;
    for (const auto& t : j.at("terms")) {
        const auto& exps = t.at("exps");
        if (!exps.is_array() || exps.size() != num_vars)
            throw algebra_error("exponent vector must have " + std::to_string(num_vars) + " entries");
        term out;
        for (std::size_t i = 0; i < num_vars; ++i) {
            int e = exps[i].get<int>();
            if (e < 0 && !is_laurent(all_vars[i]))
                throw algebra_error("negative exponent for non-Laurent variable " + std::string(var_name(all_vars[i])));
            out.exps[i] = static_cast<std::int16_t>(e);
        }
        out.coeff = rational_from_json(t.at("coeff"));
        terms.push_back(std::move(out));
    }
    return poly::from_terms(std::move(terms));
}

json to_json(const ratfun& r)
{
    return {{"num", to_json(r.num())}, {"den", to_json(r.den())}, {"text", r.to_string()}};
}

ratfun ratfun_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw algebra_error("rational function JSON needs \"num\" and \"den\"");
    return ratfun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const qseries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_json(c));
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

qseries qseries_from_json(const json& j)
{
    auto order = j.at("order").get<std::size_t>();
    const auto& cs = j.at("coeffs");
    if (cs.size() != order + 1)
        throw algebra_error("q-series JSON coefficient count does not match order");
    std::vector<ratfun> coeffs;
    for (const auto& c : cs)
        coeffs.push_back(ratfun_from_json(c));
    return qseries(order, std::move(coeffs));
}

} // namespace extverts
