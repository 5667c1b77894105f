#include "extverts/cli.hpp"

#include "extverts/geometry.hpp"
#include "extverts/jack.hpp"
#include "extverts/verify.hpp"
#include "extverts/vertex.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace extverts {

namespace {

namespace fs = std::filesystem;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class output_format { text, json, csv };

struct global_options {
    std::string cache_dir;
    bool no_cache = false;
    std::string format = "text";
    unsigned jobs = 0;

    output_format fmt() const
    {
        return format == "json" ? output_format::json : format == "csv" ? output_format::csv : output_format::text;
    }
};

std::string label(const partition& p)
{
    return p.empty() ? "0" : p.to_string();
}

partition partition_arg(const std::string& text, const char* what)
{
    try {
        return parse_partition(text);
    } catch (const std::exception& e) {
        throw usage_error(std::string(what) + ": " + e.what());
    }
}

rational rational_arg(const std::string& text, const char* what)
{
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw usage_error(std::string(what) + ": " + e.what());
    }
}

// --cache-dir, then $EXTVERTS_CACHE, then $XDG_CACHE_HOME/extverts, then ~/.cache/extverts.
fs::path cache_file(const global_options& g)
{
    fs::path dir;
    if (!g.cache_dir.empty())
        dir = g.cache_dir;
    else if (const char* env = std::getenv("EXTVERTS_CACHE"); env && *env)
        dir = env;
    else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        dir = fs::path(xdg) / "extverts";
    else if (const char* home = std::getenv("HOME"); home && *home)
        dir = fs::path(home) / ".cache" / "extverts";
    else
        dir = ".extverts-cache";
    return dir / "jack_cache.json";
}

// Specialization of m, t1, t2 from "p/q" strings; empty means symbolic.
struct specialization {
    std::string m, t1, t2;

    std::vector<std::pair<var, ratfun>> assignments() const
    {
        std::vector<std::pair<var, ratfun>> out;
        if (!m.empty())
            out.emplace_back(var::m, ratfun(rational_arg(m, "--m")));
        if (!t1.empty())
            out.emplace_back(var::t1, ratfun(rational_arg(t1, "--t1")));
        if (!t2.empty())
            out.emplace_back(var::t2, ratfun(rational_arg(t2, "--t2")));
        for (const auto& [v, value] : out)
            if ((v == var::t1 || v == var::t2) && value.is_zero())
                throw usage_error("specialization " + std::string(var_name(v)) + " = 0 annihilates t1*t2");
        return out;
    }

    json to_json() const
    {
        json j = json::object();
        if (!m.empty())
            j["m"] = m;
        if (!t1.empty())
            j["t1"] = t1;
        if (!t2.empty())
            j["t2"] = t2;
        return j;
    }

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--m", m, "Specialize m to an exact rational p/q");
        cmd->add_option("--t1", t1, "Specialize t1 to an exact nonzero rational p/q");
        cmd->add_option("--t2", t2, "Specialize t2 to an exact nonzero rational p/q");
    }
};

// ---------------------------------------------------------------------------

struct jack_args {
    std::string partition_text;
    std::string theta = "symbolic";
};

int cmd_jack(const jack_args& a, const global_options& g, std::ostream& out)
{
    partition mu = partition_arg(a.partition_text, "partition");
    symfunc f = jack(mu);
    if (a.theta != "symbolic") {
        rational value = rational_arg(a.theta, "--theta");
        if (value == 0)
            throw usage_error("--theta: θ = 0 is a pole of the Jack coefficients");
        const std::pair<var, ratfun> sub{var::theta, ratfun(value)};
        f = f.substitute(std::span(&sub, 1));
    }
    switch (g.fmt()) {
    case output_format::text:
        out << f.to_string() << '\n';
        break;
    case output_format::json: {
        json terms = json::array();
        for (const auto& [rho, c] : f.terms())
            terms.push_back({{"partition", rho.to_string()}, {"coeff", c.to_string()}, {"value", to_json(c)}});
        out << json{{"partition", mu.to_string()}, {"theta", a.theta}, {"expansion", f.to_string()}, {"terms", terms}}
                   .dump(2)
            << '\n';
        break;
    }
    case output_format::csv:
        out << "partition,coeff\n";
        for (const auto& [rho, c] : f.terms())
            out << '"' << rho.to_string() << "\"," << '"' << c.to_string() << "\"\n";
        break;
    }
    return exit_pass;
}

// ---------------------------------------------------------------------------

struct verify_args {
    std::string suite;
    int max_size = 4;
    std::optional<int> order;
    std::string lambda, mu, inject_fault, report_path;
    bool lambda_set = false, mu_set = false, quiet = false;
};

int cmd_verify(const verify_args& a, const global_options& g, std::ostream& out, std::ostream& err)
{
    verify_options o;
    auto suite = suite_from_name(a.suite);
    if (!suite)
        throw usage_error("unknown suite '" + a.suite + "'");
    o.suite = *suite;
    o.max_size = a.max_size;
    o.order = a.order;
    o.threads = g.jobs;
    if (a.lambda_set != a.mu_set)
        throw usage_error("--lambda and --mu must be given together");
    if (a.lambda_set) {
        if (o.suite == verify_suite::trace)
            throw usage_error("the trace suite has no (lambda, mu) cases; use --order");
        o.lambda = partition_arg(a.lambda, "--lambda");
        o.mu = partition_arg(a.mu, "--mu");
    }
    if (!a.inject_fault.empty())
        o.inject_fault = a.inject_fault;

    int effective = o.suite == verify_suite::trace ? o.order.value_or(o.max_size) : o.max_size;
    if (effective > 6 && !a.lambda_set)
        err << "warning: size " << effective << " exceeds 6; the sweep may take a long time\n";

    report rep = run_verify(o);

    if (!a.report_path.empty()) {
        std::ofstream file(a.report_path, std::ios::trunc);
        if (!file)
            throw usage_error("cannot write report to " + a.report_path);
        file << rep.to_json().dump(2) << '\n';
    }
    switch (g.fmt()) {
    case output_format::text: out << rep.to_text(!a.quiet); break;
    case output_format::json: out << rep.to_json().dump(2) << '\n'; break;
    case output_format::csv: out << rep.to_csv(); break;
    }
    return rep.all_passed() ? exit_pass : exit_failure;
}

// ---------------------------------------------------------------------------

struct nekrasov_args {
    int order = 4;
    specialization spec;
};

int cmd_nekrasov(const nekrasov_args& a, const global_options& g, std::ostream& out, std::ostream& err)
{
    auto assignments = a.spec.assignments();
    if (a.order > 8)
        err << "warning: order " << a.order << " exceeds 8; the fixed-point sum may take a long time\n";
    const auto order = static_cast<std::size_t>(a.order);
    qseries sum = nekrasov_sum(order, g.jobs);
    qseries product = nekrasov_product(order);
    const bool match = sum == product;
    if (!assignments.empty()) {
        sum = sum.substitute(assignments);
        product = product.substitute(assignments);
    }
    switch (g.fmt()) {
    case output_format::text:
        out << "sum:     " << sum.to_string() << '\n'
            << "product: " << product.to_string() << '\n'
            << "match:   " << (match ? "yes" : "NO") << '\n';
        break;
    case output_format::json:
        out << json{{"command", "nekrasov"},
                    {"order", a.order},
                    {"specialization", a.spec.to_json()},
                    {"sum", to_json(sum)},
                    {"product", to_json(product)},
                    {"sum_text", sum.to_string()},
                    {"product_text", product.to_string()},
                    {"match", match}}
                   .dump(2)
            << '\n';
        break;
    case output_format::csv:
        out << "power,sum,product\n";
        for (std::size_t n = 0; n <= order; ++n)
            out << n << ",\"" << sum[n].to_string() << "\",\"" << product[n].to_string() << "\"\n";
        break;
    }
    if (!match)
        err << "mismatch between the fixed-point sum and the product form\n";
    return match ? exit_pass : exit_failure;
}

// ---------------------------------------------------------------------------

struct ext_args {
    std::string lambda, mu;
    std::string route = "hooks";
};

int cmd_ext_char(const ext_args& a, const global_options& g, std::ostream& out, std::ostream& err)
{
    partition lambda = partition_arg(a.lambda, "lambda");
    partition mu = partition_arg(a.mu, "mu");
    character c = a.route == "ratfun" ? ext_character_ratfun(lambda, mu) : ext_character_hooks(lambda, mu);
    bool ok = true;
    if (a.route == "both") {
        ok = c == ext_character_ratfun(lambda, mu);
        if (!ok)
            err << "hook formula and rational-function route disagree\n";
    }
    switch (g.fmt()) {
    case output_format::text: out << c.to_string() << '\n'; break;
    case output_format::json:
        out << json{{"lambda", label(lambda)}, {"mu", label(mu)}, {"route", a.route}, {"character", c.to_json()},
                    {"text", c.to_string()}, {"mass", c.mass()}}
                   .dump(2)
            << '\n';
        break;
    case output_format::csv:
        out << "e1,e2,mult\n";
        for (const auto& [w, mult] : c.terms())
            out << w.first << ',' << w.second << ',' << mult << '\n';
        break;
    }
    return ok ? exit_pass : exit_failure;
}

// ---------------------------------------------------------------------------

struct matrix_args {
    std::string lambda, mu;
    specialization spec;
};

int cmd_matrix_element(const matrix_args& a, const global_options& g, std::ostream& out)
{
    partition lambda = partition_arg(a.lambda, "lambda");
    partition mu = partition_arg(a.mu, "mu");
    auto assignments = a.spec.assignments();
    z_graded w = w_matrix_element(lambda, mu);
    if (!assignments.empty()) {
        z_graded s;
        for (const auto& [z, v] : w) {
            ratfun value = v.substitute(assignments);
            if (!value.is_zero())
                s.emplace(z, std::move(value));
        }
        w = std::move(s);
    }
    switch (g.fmt()) {
    case output_format::text:
        if (w.empty())
            out << "0\n";
        for (const auto& [z, v] : w)
            out << "z^" << z << ": " << v.to_string() << '\n';
        break;
    case output_format::json: {
        json entries = json::array();
        for (const auto& [z, v] : w)
            entries.push_back({{"zpower", z}, {"value", to_json(v)}, {"text", v.to_string()}});
        out << json{{"lambda", label(lambda)}, {"mu", label(mu)}, {"specialization", a.spec.to_json()},
                    {"entries", entries}}
                   .dump(2)
            << '\n';
        break;
    }
    case output_format::csv:
        out << "lambda,mu,zpower,value\n";
        for (const auto& [z, v] : w)
            out << '"' << label(lambda) << "\",\"" << label(mu) << "\"," << z << ",\"" << v.to_string() << "\"\n";
        break;
    }
    return exit_pass;
}

// ---------------------------------------------------------------------------

int cmd_cache(const std::string& action, const global_options& g, std::ostream& out)
{
    const fs::path file = cache_file(g);
    if (action == "path") {
        out << file.string() << '\n';
        return exit_pass;
    }
    if (action == "clear") {
        std::error_code ec;
        fs::remove(file, ec);
        if (ec)
            throw std::runtime_error("cannot remove cache file " + file.string() + ": " + ec.message());
        global_jack_cache().reset();
        out << "cleared " << file.string() << '\n';
        return exit_pass;
    }
    const auto& cache = global_jack_cache();
    switch (g.fmt()) {
    case output_format::json:
        out << json{{"path", file.string()}, {"entries", cache.size()}, {"max_degree", cache.max_degree()}}.dump(2)
            << '\n';
        break;
    case output_format::csv:
        out << "path,entries,max_degree\n\"" << file.string() << "\"," << cache.size() << ',' << cache.max_degree()
            << '\n';
        break;
    case output_format::text:
        out << "entries: " << cache.size() << '\n';
        out << "max degree: " << (cache.size() == 0 ? std::string("none") : std::to_string(cache.max_degree()))
            << '\n';
        out << "path: " << file.string() << '\n';
        break;
    }
    return exit_pass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Jack polynomials, Ext characters, vertex-operator matrix elements and the\n"
                 "adjoint-matter partition function on Hilbert schemes of points of C^2.",
                 "extverts"};
    app.require_subcommand(1);
    app.fallthrough();

    global_options g;
    app.add_option("--cache-dir", g.cache_dir, "Jack cache directory (overrides $EXTVERTS_CACHE)");
    app.add_flag("--no-cache", g.no_cache, "Neither read nor write the Jack cache");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs,-j", g.jobs, "Worker threads (0 = hardware concurrency)");

    jack_args ja;
    auto* jack_cmd = app.add_subcommand("jack", "Print J_mu in the power-sum basis");
    jack_cmd->add_option("partition", ja.partition_text, "Partition, e.g. 2,1")->required();
    jack_cmd->add_option("--theta", ja.theta, "'symbolic' or an exact rational p/q");

    verify_args va;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep");
    verify_cmd->add_option("suite", va.suite, "pieri | character | serre | bridge | theorem | trace")
        ->required()
        ->check(CLI::IsMember({"pieri", "character", "serre", "bridge", "theorem", "trace"}));
    verify_cmd->add_option("--max-size", va.max_size, "Largest |lambda|, |mu| swept")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--order", va.order, "q-order of the trace suite (default: --max-size)")
        ->check(CLI::NonNegativeNumber);
    auto* lambda_opt = verify_cmd->add_option("--lambda", va.lambda, "Rerun a single case: lambda");
    auto* mu_opt = verify_cmd->add_option("--mu", va.mu, "Rerun a single case: mu");
    verify_cmd->add_option("--report", va.report_path, "Write the JSON report to this path");
    verify_cmd->add_option("--inject-fault", va.inject_fault,
                           "Perturb one case (lambda:mu, or q^n for trace) to exercise failure reporting");
    verify_cmd->add_flag("--quiet,-q", va.quiet, "Print only failures and the summary");

    nekrasov_args na;
    auto* nekrasov_cmd = app.add_subcommand("nekrasov", "Fixed-point sum and product form of Z(m)");
    nekrasov_cmd->add_option("--order", na.order, "Truncation order in q")->check(CLI::NonNegativeNumber);
    na.spec.add_to(nekrasov_cmd);

    ext_args ea;
    auto* ext_cmd = app.add_subcommand("ext-char", "Character of the Ext bundle at (I_lambda, I_mu)");
    ext_cmd->add_option("lambda", ea.lambda)->required();
    ext_cmd->add_option("mu", ea.mu)->required();
    ext_cmd->add_option("--route", ea.route, "hooks | ratfun | both")
        ->check(CLI::IsMember({"hooks", "ratfun", "both"}));

    matrix_args ma;
    auto* matrix_cmd = app.add_subcommand("matrix-element", "<Gamma f_lambda, f_mu> by z-power");
    matrix_cmd->add_option("lambda", ma.lambda)->required();
    matrix_cmd->add_option("mu", ma.mu)->required();
    ma.spec.add_to(matrix_cmd);

    std::string cache_action;
    auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the Jack cache");
    cache_cmd->add_option("action", cache_action, "stats | clear | path")
        ->required()
        ->check(CLI::IsMember({"stats", "clear", "path"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }
    va.lambda_set = lambda_opt->count() > 0;
    va.mu_set = mu_opt->count() > 0;

    // Each invocation starts from the on-disk cache only.
    auto& cache = global_jack_cache();
    cache.reset();
    set_jack_cache_enabled(!g.no_cache);
    const fs::path file = cache_file(g);
    if (!g.no_cache) {
        try {
            cache.load(file);
        } catch (const std::exception& e) {
            err << "warning: ignoring cache: " << e.what() << '\n';
            cache.reset();
        }
    }

    int code = exit_pass;
    try {
        if (*jack_cmd)
            code = cmd_jack(ja, g, out);
        else if (*verify_cmd)
            code = cmd_verify(va, g, out, err);
        else if (*nekrasov_cmd)
            code = cmd_nekrasov(na, g, out, err);
        else if (*ext_cmd)
            code = cmd_ext_char(ea, g, out, err);
        else if (*matrix_cmd)
            code = cmd_matrix_element(ma, g, out);
        else if (*cache_cmd)
            return cmd_cache(cache_action, g, out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (!g.no_cache && cache.dirty()) {
        try {
            cache.save(file);
        } catch (const std::exception& e) {
            err << "warning: " << e.what() << '\n';
        }
    }
    return code;
}

} // namespace extverts
