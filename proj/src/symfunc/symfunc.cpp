#include "extverts/symfunc.hpp"

#include <mutex>
#include <sstream>

namespace extverts {

symfunc::symfunc(const ratfun& constant)
{
    if (!constant.is_zero())
        terms_.emplace(partition{}, constant);
}

symfunc symfunc::power_sum(const partition& lambda, const ratfun& coeff)
{
    symfunc f;
    f.add_term(lambda, coeff);
    return f;
}

ratfun symfunc::coeff(const partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? ratfun() : it->second;
}

int symfunc::max_degree() const
{
    int d = -1;
    for (const auto& [lambda, c] : terms_)
        d = std::max(d, lambda.size());
    return d;
}

void symfunc::add_term(const partition& lambda, const ratfun& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

symfunc& symfunc::operator+=(const symfunc& other)
{
    for (const auto& [lambda, c] : other.terms_)
        add_term(lambda, c);
    return *this;
}

symfunc& symfunc::operator-=(const symfunc& other)
{
    for (const auto& [lambda, c] : other.terms_)
        add_term(lambda, -c);
    return *this;
}

symfunc& symfunc::operator*=(const ratfun& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, coeff] : terms_)
        coeff *= c;
    return *this;
}

symfunc operator*(const symfunc& a, const symfunc& b)
{
    return multiply(a, b, a.max_degree() + b.max_degree());
}

symfunc multiply(const symfunc& a, const symfunc& b, int degree_cap)
{
    symfunc out;
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            if (la.size() + lb.size() <= degree_cap)
                out.add_term(la.join(lb), ca * cb);
    return out;
}

symfunc symfunc::degree_component(int degree) const
{
    symfunc out;
    for (const auto& [lambda, c] : terms_)
        if (lambda.size() == degree)
            out.terms_.emplace(lambda, c);
    return out;
}

symfunc symfunc::truncated(int degree_cap) const
{
    symfunc out;
    for (const auto& [lambda, c] : terms_)
        if (lambda.size() <= degree_cap)
            out.terms_.emplace(lambda, c);
    return out;
}

symfunc symfunc::map_coeffs(const std::function<ratfun(const partition&, const ratfun&)>& f) const
{
    symfunc out;
    for (const auto& [lambda, c] : terms_)
        out.add_term(lambda, f(lambda, c));
    return out;
}

symfunc symfunc::substitute(std::span<const std::pair<var, ratfun>> assignments) const
{
    return map_coeffs([&](const partition&, const ratfun& c) { return c.substitute(assignments); });
}

std::string symfunc::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        // largest parts first: p2·p1^2
        std::string mono;
        auto mult = lambda.multiplicities();
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
            if (!mono.empty())
                mono += "·";
            mono += "p" + std::to_string(it->first);
            if (it->second > 1)
                mono += "^" + std::to_string(it->second);
        }

        bool negative = c.is_constant() && c.constant_value() < 0;
        ratfun shown = negative ? -c : c;
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;

        bool unit = shown.is_constant() && shown.constant_value() == 1;
        if (mono.empty()) {
            out << (shown.is_constant() ? shown.to_string() : "(" + shown.to_string() + ")");
        } else if (unit) {
            out << mono;
        } else if (shown.is_constant() && is_integer(shown.constant_value())) {
            out << shown.to_string() << "·" << mono;
        } else {
            out << "(" << shown.to_string() << ")·" << mono;
        }
    }
    return out.str();
}

ratfun power_sum_pairing::norm(const partition& lambda) const
{
    ratfun n(rational(z_factor(lambda)));
    for (int p : lambda.parts())
        n *= weight_(p);
    return n;
}

ratfun power_sum_pairing::operator()(const symfunc& f, const symfunc& g) const
{
    const symfunc& small = f.terms().size() <= g.terms().size() ? f : g;
    const symfunc& large = &small == &f ? g : f;
    ratfun sum;
    for (const auto& [lambda, c] : small.terms()) {
        auto it = large.terms().find(lambda);
        if (it != large.terms().end())
            sum += c * it->second * norm(lambda);
    }
    return sum;
}

symfunc power_sum_pairing::apply_dual(const symfunc& f, const symfunc& g) const
{
    std::map<int, ratfun> scale; // n * w(n)
    auto factor = [&](int n) -> const ratfun& {
        auto it = scale.find(n);
        if (it == scale.end())
            it = scale.emplace(n, ratfun(static_cast<long>(n)) * weight_(n)).first;
        return it->second;
    };

    symfunc out;
    for (const auto& [rho, cf] : f.terms()) {
        auto rho_mult = rho.multiplicities();
        for (const auto& [lambda, cg] : g.terms()) {
            auto rest = lambda.remove(rho);
            if (!rest)
                continue;
            // prod_n (n w_n)^{k_n} m_n! / (m_n - k_n)!
            auto lambda_mult = lambda.multiplicities();
            ratfun c = cf * cg;
            integer falling = 1;
            for (auto [n, k] : rho_mult) {
                int m = lambda_mult[n];
                for (int i = 0; i < k; ++i) {
                    falling *= m - i;
                    c *= factor(n);
                }
            }
            out.add_term(*rest, c * ratfun(rational(falling)));
        }
    }
    return out;
}

const power_sum_pairing& jack_pairing()
{
    static const power_sum_pairing pairing([](int) { return ratfun::variable(var::theta).inverse(); });
    return pairing;
}

ratfun jack_inner(const symfunc& f, const symfunc& g)
{
    return jack_pairing()(f, g);
}

symfunc apply_dual(const symfunc& f, const symfunc& g)
{
    return jack_pairing().apply_dual(f, g);
}

integer power_to_monomial(const partition& mu, const partition& lambda)
{
    if (mu.size() != lambda.size())
        return 0;
    std::vector<int> room(lambda.parts().begin(), lambda.parts().end());
    const auto& parts = mu.parts();
    integer count = 0;
    // Parts of mu are placed largest first; each goes into a row with room.
    auto place = [&](auto&& self, std::size_t i) -> void {
        if (i == parts.size()) {
            ++count;
            return;
        }
        for (auto& r : room) {
            if (r >= parts[i]) {
                r -= parts[i];
                self(self, i + 1);
                r += parts[i];
            }
        }
    };
    place(place, 0);
    // every row is filled exactly because the sizes agree
    return count;
}

namespace {

// m_lambda in the p-basis for all lambda of one degree, by back
// substitution in p_mu = sum_{lambda >= mu} L(mu, lambda) m_lambda.
std::map<partition, symfunc> monomials_of_degree(int n)
{
    auto parts = enumerate(n); // decreasing lex, a linear extension of dominance from the top
    std::map<partition, symfunc> m;
    for (const auto& mu : parts) {
        symfunc value = symfunc::power_sum(mu);
        for (const auto& [lambda, m_lambda] : m) {
            integer l = power_to_monomial(mu, lambda);
            if (l != 0)
                value -= m_lambda * ratfun(rational(l));
        }
        value *= ratfun(rational(1, 1) / rational(power_to_monomial(mu, mu)));
        m.emplace(mu, std::move(value));
    }
    return m;
}

} // namespace

symfunc monomial_sym(const partition& lambda)
{
    static std::mutex mutex;
    static std::map<int, std::map<partition, symfunc>> memo;
    std::lock_guard lock(mutex);
    auto it = memo.find(lambda.size());
    if (it == memo.end())
        it = memo.emplace(lambda.size(), monomials_of_degree(lambda.size())).first;
    return it->second.at(lambda);
}

symfunc exp_power_sums(const std::function<ratfun(int)>& a, int degree_cap)
{
    std::map<int, ratfun> an;
    for (int n = 1; n <= degree_cap; ++n)
        an.emplace(n, a(n));
    symfunc out;
    for (const auto& rho : enumerate_up_to(degree_cap)) {
        ratfun c(1);
        for (auto [n, k] : rho.multiplicities()) {
            c *= an.at(n).pow(k);
            integer f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
            c *= ratfun(rational(1) / rational(f));
        }
        out.add_term(rho, c);
    }
    return out;
}

symfunc e_operator_power(const ratfun& s, int degree_cap)
{
    return exp_power_sums(
        [&](int n) { return s * ratfun(rational(n % 2 == 1 ? 1 : -1, n)); }, degree_cap);
}

} // namespace extverts
