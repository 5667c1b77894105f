#pragma once

#include "extverts/serialize.hpp"
#include "extverts/symfunc.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

namespace extverts {

/// Integral-form Jack polynomials J_mu for every mu of size n, by
/// Gram-Schmidt orthogonalization of monomial functions under the Jack
/// pairing, normalized so the p_1^n coefficient is 1.
///
/// `order` lists the partitions of n from the bottom up and must be a
/// linear extension of dominance (throws std::invalid_argument otherwise);
/// by default the reverse of enumerate(n) is used.
std::map<partition, symfunc> jack_gram_schmidt(int n, std::span<const partition> order = {});

/// Shared memo of Jack polynomials keyed by partition.
///
/// Reads take a shared lock and inserts are insert-if-absent, so concurrent
/// computations of the same entry are harmless. Persisted as a JSON array
/// [{"partition": "2,1", "coeffs": [{"partition": "1,1,1", "coeff": "..."}]}].
class jack_cache {
public:
    std::optional<symfunc> find(const partition& mu) const;
    /// Returns false if an entry was already present (the old one is kept).
    bool insert(const partition& mu, symfunc value);

    std::size_t size() const;
    int max_degree() const;
    void clear();
    /// Drops all entries and the dirty flag (fresh in-memory state).
    void reset();
    bool dirty() const;

    json to_json() const;
    /// Merges entries from a cache document (existing entries win).
    void merge_json(const json& doc);

    /// Missing file means empty cache. Throws std::runtime_error on a malformed file.
    void load(const std::filesystem::path& file);
    /// Writes to a sibling temporary and renames over `file`.
    void save(const std::filesystem::path& file);

private:
    mutable std::shared_mutex mutex_;
    std::map<partition, symfunc> entries_;
    bool dirty_ = false;
};

/// Process-wide cache used by jack().
jack_cache& global_jack_cache();
/// When disabled, jack() recomputes every time and never touches the cache.
void set_jack_cache_enabled(bool enabled);
bool jack_cache_enabled();

/// J_mu with coefficients in Q(θ).
symfunc jack(const partition& mu);

} // namespace extverts
