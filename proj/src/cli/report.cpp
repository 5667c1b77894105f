#include "extverts/verify.hpp"

#include <iomanip>
#include <sstream>

namespace extverts {

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::size_t report::failures() const
{
    std::size_t n = 0;
    for (const auto& c : cases)
        n += c.pass ? 0 : 1;
    return n;
}

json report::to_json() const
{
    json out;
    out["command"] = command;
    out["parameters"] = parameters;
    json list = json::array();
    for (const auto& c : cases) {
        json j = {{"key", c.key}, {"lambda", c.lambda}, {"mu", c.mu}, {"pass", c.pass}, {"detail", c.detail}};
        if (!c.witness.is_null())
            j["witness"] = c.witness;
        list.push_back(std::move(j));
    }
    out["cases"] = std::move(list);
    out["summary"] = {{"cases", cases.size()}, {"failures", failures()}, {"passed", all_passed()}};
    out["duration_seconds"] = seconds;
    return out;
}

std::string report::to_csv() const
{
    std::ostringstream out;
    out << "key,lambda,mu,pass,detail\n";
    for (const auto& c : cases)
        out << csv_field(c.key) << ',' << csv_field(c.lambda) << ',' << csv_field(c.mu) << ','
            << (c.pass ? "pass" : "fail") << ',' << csv_field(c.detail) << '\n';
    return out.str();
}

std::string report::to_text(bool verbose) const
{
    std::ostringstream out;
    for (const auto& c : cases) {
        if (c.pass && !verbose)
            continue;
        out << (c.pass ? "PASS " : "FAIL ") << c.key;
        if (!c.detail.empty())
            out << "  " << c.detail;
        out << '\n';
        if (!c.pass && c.witness.contains("rerun"))
            out << "     rerun: " << c.witness["rerun"].get<std::string>() << '\n';
    }
    out << command << ": " << cases.size() << " cases, " << failures() << " failed (" << std::fixed
        << std::setprecision(2) << seconds << " s)\n";
    return out.str();
}

} // namespace extverts
