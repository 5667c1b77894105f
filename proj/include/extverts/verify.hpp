#pragma once

#include "extverts/partition.hpp"
#include "extverts/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace extverts {

struct case_result {
    std::string key; // "lambda|mu" or "q^n"; sort key is the case index
    std::string lambda;
    std::string mu;
    bool pass = false;
    std::string detail;
    /// Complete enough to rerun the case alone: sides of the identity,
    /// their difference, and the command line that reproduces it.
    json witness;
};

/// Outcome of a verification sweep.
struct report {
    std::string command;
    json parameters = json::object();
    std::vector<case_result> cases;
    double seconds = 0;

    std::size_t failures() const;
    bool all_passed() const { return failures() == 0; }

    json to_json() const;
    std::string to_csv() const;
    std::string to_text(bool verbose) const;
};

enum class verify_suite { pieri, character, serre, bridge, theorem, trace };

std::optional<verify_suite> suite_from_name(std::string_view name);
std::string_view suite_name(verify_suite suite);

struct verify_options {
    verify_suite suite = verify_suite::pieri;
    int max_size = 4;
    /// q-order for the trace suite (defaults to max_size when unset).
    std::optional<int> order;
    /// Restrict to one (lambda, mu) case; both must be set together.
    std::optional<partition> lambda;
    std::optional<partition> mu;
    /// Adds 1 to the first side of the named case ("lambda:mu" or "q^n"),
    /// to confirm the harness reports and reproduces failures.
    std::optional<std::string> inject_fault;
    unsigned threads = 0;
};

/// Runs every case of the suite; results are ordered by case index
/// regardless of scheduling.
report run_verify(const verify_options& options);

} // namespace extverts
