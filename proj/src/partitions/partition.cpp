#include "extverts/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace extverts {

namespace {

void validate(const std::vector<int>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

} // namespace

partition::partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

partition::partition(std::vector<int> parts) : parts_(std::move(parts))
{
    validate(parts_);
    for (int p : parts_)
        size_ += p;
}

partition partition::from_multiset(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return partition(std::move(parts));
}

int partition::part(int i) const
{
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

bool partition::contains(box b) const
{
    return b.row >= 1 && b.col >= 1 && b.col <= part(b.row);
}

std::vector<box> partition::boxes() const
{
    std::vector<box> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j)
            out.push_back({i, j});
    return out;
}

partition partition::transpose() const
{
    std::vector<int> t;
    for (int j = 1; j <= part(1); ++j) {
        int c = 0;
        while (part(c + 1) >= j)
            ++c;
        t.push_back(c);
    }
    return partition(std::move(t));
}

std::map<int, int> partition::multiplicities() const
{
    std::map<int, int> m;
    for (int p : parts_)
        ++m[p];
    return m;
}

partition partition::join(const partition& other) const
{
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(out),
               std::greater<>());
    return partition(std::move(out));
}

std::optional<partition> partition::remove(const partition& other) const
{
    std::vector<int> out;
    std::size_t j = 0;
    for (int p : parts_) {
        if (j < other.parts_.size() && other.parts_[j] == p) {
            ++j;
            continue;
        }
        if (j < other.parts_.size() && other.parts_[j] > p)
            return std::nullopt;
        out.push_back(p);
    }
    if (j != other.parts_.size())
        return std::nullopt;
    return partition(std::move(out));
}

std::string partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

int arm(const partition& lambda, box b)
{
    return lambda.part(b.row) - b.col;
}

int leg(const partition& lambda, box b)
{
    // lambda'_j = #{i : lambda_i >= j}
    int column = 0;
    while (lambda.part(column + 1) >= b.col)
        ++column;
    return column - b.row;
}

bool dominance_leq(const partition& lambda, const partition& mu)
{
    if (lambda.size() != mu.size())
        return false;
    int a = 0, b = 0;
    int n = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= n; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a > b)
            return false;
    }
    return true;
}

std::vector<partition> enumerate(int n)
{
    std::vector<partition> out;
    if (n < 0)
        return out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<partition> enumerate_up_to(int max_size)
{
    std::vector<partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto ps = enumerate(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

integer z_factor(const partition& lambda)
{
    integer z = 1;
    for (auto [k, m] : lambda.multiplicities()) {
        for (int i = 0; i < m; ++i)
            z *= k;
        integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        z *= f;
    }
    return z;
}

partition parse_partition(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "0" || text == "∅")
        return {};
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto piece = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
    }
    return partition(std::move(parts));
}

} // namespace extverts
