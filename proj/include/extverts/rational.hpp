#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace extverts {

// Arbitrary-precision rationals. mpq_class keeps values in lowest terms
// with a positive denominator as long as every constructed value is
// canonicalized, which parse_rational() does.
using rational = mpq_class;
using integer = mpz_class;

class algebra_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" (q != 0). Throws algebra_error on bad input.
rational parse_rational(std::string_view text);

/// Formats as "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const rational& value);

inline bool is_integer(const rational& value) { return value.get_den() == 1; }

} // namespace extverts
