#include "extverts/jack.hpp"

#include "extverts/expr.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <stdexcept>

namespace extverts {

std::map<partition, symfunc> jack_gram_schmidt(int n, std::span<const partition> order)
{
    std::vector<partition> sequence;
    if (order.empty()) {
        auto all = enumerate(n);
        sequence.assign(all.rbegin(), all.rend());
    } else {
        sequence.assign(order.begin(), order.end());
        if (sequence.size() != enumerate(n).size())
            throw std::invalid_argument("Gram-Schmidt order must list every partition of n exactly once");
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            if (sequence[i].size() != n)
                throw std::invalid_argument("Gram-Schmidt order contains a partition of the wrong size");
            for (std::size_t j = i + 1; j < sequence.size(); ++j)
                if (sequence[i] == sequence[j] || dominance_leq(sequence[j], sequence[i]))
                    throw std::invalid_argument("Gram-Schmidt order is not a linear extension of dominance");
        }
    }

    const partition ones = partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    std::vector<std::pair<symfunc, ratfun>> basis; // orthogonal vectors with their norms
    std::map<partition, symfunc> out;
    for (const auto& mu : sequence) {
        symfunc m = monomial_sym(mu);
        symfunc v = m;
        for (const auto& [u, norm] : basis) {
            ratfun c = jack_inner(m, u) / norm;
            if (!c.is_zero())
                v -= u * c;
        }
        ratfun norm = jack_inner(v, v);
        basis.emplace_back(v, norm);

        ratfun lead = v.coeff(ones);
        if (lead.is_zero())
            throw algebra_error("Gram-Schmidt produced a vector without p_1^n term for " + mu.to_string());
        out.emplace(mu, v * lead.inverse());
    }
    return out;
}

std::optional<symfunc> jack_cache::find(const partition& mu) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(mu);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

bool jack_cache::insert(const partition& mu, symfunc value)
{
    std::unique_lock lock(mutex_);
    bool inserted = entries_.try_emplace(mu, std::move(value)).second;
    dirty_ = dirty_ || inserted;
    return inserted;
}

std::size_t jack_cache::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

int jack_cache::max_degree() const
{
    std::shared_lock lock(mutex_);
    int d = -1;
    for (const auto& [mu, f] : entries_)
        d = std::max(d, mu.size());
    return d;
}

void jack_cache::clear()
{
    std::unique_lock lock(mutex_);
    dirty_ = dirty_ || !entries_.empty();
    entries_.clear();
}

void jack_cache::reset()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
    dirty_ = false;
}

bool jack_cache::dirty() const
{
    std::shared_lock lock(mutex_);
    return dirty_;
}

json jack_cache::to_json() const
{
    std::shared_lock lock(mutex_);
    json doc = json::array();
    for (const auto& [mu, f] : entries_) {
        json coeffs = json::array();
        for (const auto& [lambda, c] : f.terms())
            coeffs.push_back({{"partition", lambda.to_string()}, {"coeff", c.to_string()}});
        doc.push_back({{"partition", mu.to_string()}, {"coeffs", coeffs}});
    }
    return doc;
}

void jack_cache::merge_json(const json& doc)
{
    if (!doc.is_array())
        throw std::runtime_error("Jack cache document must be a JSON array");
    for (const auto& entry : doc) {
        partition mu = parse_partition(entry.at("partition").get<std::string>());
        symfunc f;
        for (const auto& c : entry.at("coeffs"))
            f.add_term(parse_partition(c.at("partition").get<std::string>()),
                       parse_ratfun(c.at("coeff").get<std::string>()));
        std::unique_lock lock(mutex_);
        entries_.try_emplace(mu, std::move(f));
    }
}

void jack_cache::load(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        return;
    json doc;
    try {
        in >> doc;
        merge_json(doc);
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed Jack cache " + file.string() + ": " + e.what());
    }
}

void jack_cache::save(const std::filesystem::path& file)
{
    std::error_code ec;
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path(), ec);
    if (ec)
        throw std::runtime_error("cannot create cache directory " + file.parent_path().string() + ": " + ec.message());

    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
        out << to_json().dump(1) << '\n';
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec)
        throw std::runtime_error("cannot replace cache file " + file.string() + ": " + ec.message());
    std::unique_lock lock(mutex_);
    dirty_ = false;
}

jack_cache& global_jack_cache()
{
    static jack_cache cache;
    return cache;
}

namespace {
std::atomic<bool> cache_enabled{true};
}

void set_jack_cache_enabled(bool enabled)
{
    cache_enabled = enabled;
}

bool jack_cache_enabled()
{
    return cache_enabled;
}

symfunc jack(const partition& mu)
{
    if (!cache_enabled)
        return jack_gram_schmidt(mu.size()).at(mu);
    auto& cache = global_jack_cache();
    if (auto hit = cache.find(mu))
        return *hit;
    auto all = jack_gram_schmidt(mu.size());
    for (auto& [lambda, f] : all)
        cache.insert(lambda, f);
    return all.at(mu);
}

} // namespace extverts
