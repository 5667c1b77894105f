#include "extverts/rational.hpp"

#include <cctype>

namespace extverts {

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw algebra_error("malformed rational: '" + std::string(text) + "'");

    std::string n(num), d(den);
    if (n.front() == '+')
        n.erase(0, 1);
    rational r;
    r.get_num().set_str(n, 10);
    r.get_den().set_str(d, 10);
    if (r.get_den() == 0)
        throw algebra_error("zero denominator in rational: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const rational& value)
{
    return value.get_str(10);
}

} // namespace extverts
