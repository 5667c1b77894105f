#include "extverts/character.hpp"

#include <sstream>

namespace extverts {

void character::add(int e1, int e2, std::int64_t mult)
{
    if (mult == 0)
        return;
    auto& c = terms_[{e1, e2}];
    c += mult;
    if (c == 0)
        terms_.erase({e1, e2});
}

std::int64_t character::mass() const
{
    std::int64_t s = 0;
    for (const auto& [w, c] : terms_)
        s += c;
    return s;
}

bool character::is_nonnegative() const
{
    for (const auto& [w, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

character character::dual() const
{
    character out;
    for (const auto& [w, c] : terms_)
        out.add(-w.first, -w.second, c);
    return out;
}

character character::shifted(int e1, int e2) const
{
    character out;
    for (const auto& [w, c] : terms_)
        out.add(w.first + e1, w.second + e2, c);
    return out;
}

character operator+(const character& a, const character& b)
{
    character out = a;
    for (const auto& [w, c] : b.terms_)
        out.add(w.first, w.second, c);
    return out;
}

character operator-(const character& a, const character& b)
{
    character out = a;
    for (const auto& [w, c] : b.terms_)
        out.add(w.first, w.second, -c);
    return out;
}

poly character::to_poly() const
{
    std::vector<term> terms;
    for (const auto& [w, c] : terms_) {
        term t;
        t.exps[index(var::z1)] = static_cast<std::int16_t>(w.first);
        t.exps[index(var::z2)] = static_cast<std::int16_t>(w.second);
        t.coeff = rational(static_cast<long>(c));
        terms.push_back(std::move(t));
    }
    return poly::from_terms(std::move(terms));
}

std::string character::to_string() const
{
    return to_poly().to_string();
}

json character::to_json() const
{
    json out = json::array();
    for (const auto& [w, c] : terms_)
        out.push_back({{"e1", w.first}, {"e2", w.second}, {"mult", c}});
    return out;
}

character character::from_json(const json& j)
{
    if (!j.is_array())
        throw algebra_error("character JSON must be an array");
    character out;
    for (const auto& t : j)
        out.add(t.at("e1").get<int>(), t.at("e2").get<int>(), t.at("mult").get<std::int64_t>());
    return out;
}

character laurent_extract(const ratfun& r)
{
    for (var v : all_vars)
        if (!is_laurent(v) && r.depends_on(v))
            throw laurent_error("not a character: depends on " + std::string(var_name(v)), r, poly());

    if (!r.den().is_constant()) {
        auto [q, rem] = divide(r.num(), r.den());
        if (rem.is_zero()) // cannot happen for canonical input with nonconstant denominator
            rem = r.num();
        throw laurent_error("not a Laurent polynomial: " + r.to_string() + " (remainder " + rem.to_string() + ")", r,
                            rem);
    }
    poly p = r.num() * rational(1 / r.den().constant_value());

    character out;
    for (const auto& t : p.terms()) {
        if (!is_integer(t.coeff) || !t.coeff.get_num().fits_slong_p())
            throw laurent_error("character coefficient is not a machine integer: " + to_string(t.coeff), r, poly());
        out.add(t.exps[index(var::z1)], t.exps[index(var::z2)], t.coeff.get_num().get_si());
    }
    return out;
}

} // namespace extverts
