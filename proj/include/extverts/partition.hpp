#pragma once

#include "extverts/rational.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extverts {

/// A cell of a Young diagram in matrix convention: box (i, j) lies in
/// lambda iff j <= lambda_i. Rows pair with x2, columns with x1.
struct box {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const box&, const box&) = default;
};

/// Integer partition: weakly decreasing positive parts; {} is the empty
/// partition. Also serves as the index of power-sum monomials p_lambda.
class partition {
public:
    partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    partition(std::initializer_list<int> parts);
    explicit partition(std::vector<int> parts);

    /// Sorts the multiset of positive parts into a partition.
    static partition from_multiset(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// lambda_i for i >= 1, zero beyond the length.
    int part(int i) const;
    bool contains(box b) const;
    std::vector<box> boxes() const;

    partition transpose() const;

    /// m_k(lambda) for k >= 1.
    std::map<int, int> multiplicities() const;

    /// Multiset union (the index of p_lambda * p_mu).
    partition join(const partition& other) const;
    /// Multiset difference when `other` is a sub-multiset.
    std::optional<partition> remove(const partition& other) const;

    /// "3,1"; the empty partition is "".
    std::string to_string() const;

    friend bool operator==(const partition& a, const partition& b) { return a.parts_ == b.parts_; }
    /// Lexicographic comparison of part lists (a total order, not dominance).
    friend std::strong_ordering operator<=>(const partition& a, const partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// a_lambda(i,j) = lambda_i - j; total on all boxes via zero extension.
int arm(const partition& lambda, box b);
/// l_lambda(i,j) = lambda'_j - i; total on all boxes via zero extension.
int leg(const partition& lambda, box b);

/// lambda <= mu in dominance order (requires |lambda| == |mu|, else false).
bool dominance_leq(const partition& lambda, const partition& mu);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<partition> enumerate(int n);

/// All partitions of 0..max_size, grouped by size, each group reverse-lex.
std::vector<partition> enumerate_up_to(int max_size);

/// z_lambda = prod_k k^{m_k} m_k!.
integer z_factor(const partition& lambda);

/// Parses "3,1", "" or "0" (empty). Throws std::invalid_argument.
partition parse_partition(std::string_view text);

} // namespace extverts
