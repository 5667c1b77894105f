#pragma once

#include "extverts/qseries.hpp"
#include "extverts/ratfun.hpp"

#include <json.hpp>

namespace extverts {

using json = nlohmann::json;

// Wire formats:
//   rational  "p/q" (or "p")
//   poly      {"vars": [...names...], "terms": [{"exps": [...], "coeff": "p/q"}, ...]}
//   ratfun    {"num": poly, "den": poly, "text": "..."}   ("text" is informational)
//   qseries   {"order": n, "coeffs": [ratfun, ...]}
// Parsing validates arity, variable names and coefficient syntax and throws
// algebra_error on mismatch.

json to_json(const rational& r);
rational rational_from_json(const json& j);

json to_json(const poly& p);
poly poly_from_json(const json& j);

json to_json(const ratfun& r);
ratfun ratfun_from_json(const json& j);

json to_json(const qseries& s);
qseries qseries_from_json(const json& j);

} // namespace extverts
