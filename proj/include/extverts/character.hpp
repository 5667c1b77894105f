#pragma once

#include "extverts/ratfun.hpp"
#include "extverts/serialize.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace extverts {

/// Class of a T-module in the representation ring: a Laurent polynomial in
/// z1, z2 with integer coefficients, stored as (e1, e2) -> multiplicity.
class character {
public:
    using weight = std::pair<int, int>;

    character() = default;

    void add(int e1, int e2, std::int64_t mult = 1);

    const std::map<weight, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Sum of all coefficients (the virtual rank).
    std::int64_t mass() const;
    bool is_nonnegative() const;

    /// z_i -> z_i^{-1}.
    character dual() const;
    /// Multiplies by z1^e1 z2^e2.
    character shifted(int e1, int e2) const;

    friend character operator+(const character& a, const character& b);
    friend character operator-(const character& a, const character& b);
    friend bool operator==(const character& a, const character& b) = default;

    poly to_poly() const;
    ratfun to_ratfun() const { return ratfun(to_poly()); }

    /// "z1 + z2", "1", "z1^-1*z2", "0".
    std::string to_string() const;
    /// [{"e1": int, "e2": int, "mult": int}, ...]
    json to_json() const;
    static character from_json(const json& j);

private:
    std::map<weight, std::int64_t> terms_;
};

/// Raised when a rational function is not a Laurent polynomial in z1, z2.
class laurent_error : public algebra_error {
public:
    laurent_error(const std::string& what, ratfun value, poly remainder)
        : algebra_error(what), value_(std::move(value)), remainder_(std::move(remainder))
    {
    }
    const ratfun& value() const { return value_; }
    /// Remainder of the numerator modulo the denominator.
    const poly& remainder() const { return remainder_; }

private:
    ratfun value_;
    poly remainder_;
};

/// Exact Laurent polynomial represented by r. Requires r to involve only
/// z1, z2 with integer coefficients; throws laurent_error otherwise.
character laurent_extract(const ratfun& r);

} // namespace extverts
