#pragma once

#include "extverts/ratfun.hpp"

#include <string_view>

namespace extverts {

/// Parses the text produced by poly::to_string / ratfun::to_string (and
/// ordinary hand-written input): integers, registry variables ("theta" or
/// "θ"), + - * / ^ and parentheses. Exponents are integers, possibly
/// negative. Throws algebra_error with the offending position.
ratfun parse_ratfun(std::string_view text);

} // namespace extverts
