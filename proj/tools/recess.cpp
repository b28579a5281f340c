// recess: analyze open convex sets, measure rays, sweep the strip-set
// family, and run the property suites.
//
// Exit codes: 0 ok, 2 parse or usage error, 3 domain error, 4 verification
// failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recess/checks.hpp"
#include "recess/counterexample.hpp"
#include "recess/io.hpp"
#include "recess/recession.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct RunConfig
{
    std::uint64_t seed = 1;
    std::optional<std::string> norm;  // overrides the set file's norm
    double tol = recess::kDefaultTolerance;
    int tmax_exp = 40;
    double cluster_eps = 1e-6;
    std::string out;  // empty: stdout
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw recess::Error(recess::ErrorCode::Parse, "cannot write '" + cfg.out + "'");
    f << text;
}

recess::ConvexSet load(const RunConfig& cfg, const std::string& path)
{
    recess::ConvexSet set = recess::io::load_set(path);
    if (!cfg.norm) return set;
    recess::io::Json doc = recess::io::set_to_json(set);
    doc["norm"] = *cfg.norm;
    return recess::io::parse_set(doc.dump());
}

recess::Vector parse_point(const std::string& text, const char* flag)
{
    try {
        return recess::io::parse_vector(text);
    } catch (const recess::Error& e) {
        throw recess::Error(recess::ErrorCode::Parse, std::string(flag) + ": " + e.what());
    }
}

int cmd_analyze(const RunConfig& cfg, const std::string& path, bool oracle_only)
{
    const recess::ConvexSet set = load(cfg, path);
    recess::AnalyzeOptions opts;
    opts.oracle_only = oracle_only;
    opts.oracle.cap_exponent = cfg.tmax_exp;
    const recess::RecessionReport report = recess::analyze(set, opts);
    recess::io::Json j;
    j["dim"] = set.dim();
    j["norm"] = std::string(recess::to_string(set.norm()));
    j["recc_dim"] = report.cone.dimension;
    const recess::io::Json body = recess::io::to_json(report, set);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    emit(cfg, j.dump(2) + "\n");
    if (report.certificate && !report.certificate->verify(set)) return kExitVerify;
    for (const auto& p : report.coverage)
        if (!p.covered) return kExitVerify;
    return kExitOk;
}

int cmd_ray(const RunConfig& cfg, const std::string& path, const std::string& base, const std::string& dir)
{
    const recess::ConvexSet set = load(cfg, path);
    const recess::Vector z = parse_point(base, "--base");
    const recess::Vector u = parse_point(dir, "--dir");
    recess::OracleOptions opts;
    opts.cap_exponent = cfg.tmax_exp;
    const recess::RayLength len = recess::ray_length(set, z, u, opts);
    std::string line;
    switch (len.kind) {
    case recess::RayLengthKind::Infinite: line = "infinite"; break;
    case recess::RayLengthKind::ExceedsCap: line = "exceeds cap 2^" + std::to_string(cfg.tmax_exp); break;
    case recess::RayLengthKind::Finite: {
        line = len.value.decimal();
        std::string notes;
        if (len.value.is_exact() && boost::multiprecision::denominator(len.value.exact()) != 1)
            notes = "exact " + recess::to_fraction_string(len.value.exact());
        if (len.binding) notes += (notes.empty() ? "" : ", ") + std::string("binding n=") + std::to_string(*len.binding + 1);
        if (!notes.empty()) line += " (" + notes + ")";
        break;
    }
    }
    emit(cfg, line + "\n");
    return kExitOk;
}

std::vector<std::size_t> parse_dims(const std::string& text)
{
    std::vector<std::size_t> dims;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string item = text.substr(start, comma - start);
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || value == 0)
            throw recess::Error(recess::ErrorCode::Parse, "--dims: '" + item + "' is not a positive integer");
        dims.push_back(value);
        start = comma + 1;
    }
    return dims;
}

int cmd_counterexample(const RunConfig& cfg, const std::string& dims_text, const std::string& eps,
                       const std::string& system, std::optional<std::size_t> truncate)
{
    if (dims_text.empty()) throw recess::Error(recess::ErrorCode::Parse, "--dims: no dimensions given");
    recess::EscapeOptions opts;
    try {
        opts.eps = recess::parse_epsilon_rule(eps);
        opts.system = recess::parse_system_kind(system);
        opts.norm = recess::parse_norm_kind(cfg.norm.value_or("l2"));
    } catch (const recess::Error& e) {
        throw recess::Error(recess::ErrorCode::Parse, e.what());
    }
    opts.seed = cfg.seed;
    opts.truncate = truncate;
    if (truncate && *truncate == 0) throw recess::Error(recess::ErrorCode::Parse, "--truncate must be positive");
    const std::vector<std::size_t> dims = parse_dims(dims_text);
    if (!std::is_sorted(dims.begin(), dims.end()))
        throw recess::Error(recess::ErrorCode::Parse, "--dims must be ascending");
    emit(cfg, recess::escape_profile(dims, opts).to_csv());
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite)
{
    std::vector<std::string> names;
    if (suite == "all") {
        names = recess::checks::suite_names();
    } else {
        const auto known = recess::checks::suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
            throw recess::Error(recess::ErrorCode::Parse, "--suite: unknown suite '" + suite + "'");
        names.push_back(suite);
    }
    recess::checks::SuiteConfig config;
    config.seed = cfg.seed;
    config.cluster_epsilon = cfg.cluster_eps;
    config.cap_exponent = cfg.tmax_exp;

    std::string text;
    bool all_ok = true;
    for (const auto& name : names) {
        const auto result = recess::checks::run_suite(name, config);
        for (const auto& c : result.checks) {
            text += "  " + name + " / " + c.name + ": " + std::to_string(c.passed) + " passed, " +
                    std::to_string(c.failed) + " failed\n";
            for (const auto& f : c.failures) text += "    " + f + "\n";
        }
        text += name + ": " + (result.ok() ? "PASS" : "FAIL") + " (" + std::to_string(result.passed()) + " passed, " +
                std::to_string(result.failed()) + " failed)\n";
        all_ok = all_ok && result.ok();
    }
    emit(cfg, text);
    return all_ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Recession structure of open convex sets"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env = std::getenv("RECESS_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: RECESS_SEED must be a nonnegative integer\n";
            return kExitParse;
        }
    }
    std::string norm;
    app.add_option("--seed", cfg.seed, "random seed (default 1, or RECESS_SEED)");
    app.add_option("--norm", norm, "ambient norm: l1, l2, linf")->check(CLI::IsMember({"l1", "l2", "linf"}));
    app.add_option("--tol", cfg.tol, "tolerance for approximate comparisons")->check(CLI::PositiveNumber);
    app.add_option("--tmax-exp", cfg.tmax_exp, "oracle cap T_max = 2^k")->check(CLI::Range(1, 200));
    app.add_option("--cluster-eps", cfg.cluster_eps, "epsilon-net radius for limit directions")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "write output to a file instead of stdout");

    std::string set_file;
    bool oracle_only = false;
    auto* analyze = app.add_subcommand("analyze", "recession report for a set description (JSON)");
    analyze->add_option("set_file", set_file, "JSON set description")->required();
    analyze->add_flag("--oracle-only", oracle_only, "decide rays through membership queries only");

    std::string base, dir;
    auto* ray = app.add_subcommand("ray", "length of the ray {base + t dir} inside the set");
    ray->add_option("set_file", set_file, "JSON set description")->required();
    ray->add_option("--base", base, "base point, e.g. 0,0,1/2")->required();
    ray->add_option("--dir", dir, "direction, e.g. 1,0,0")->required();

    std::string dims = "2,4,8,16,32,64", eps = "linear", system = "orthonormal";
    std::optional<std::size_t> truncate;
    auto* counter = app.add_subcommand("counterexample", "escape profile CSV for the strip-set family");
    counter->add_option("--dims", dims, "ascending dimensions, comma-separated");
    counter->add_option("--eps", eps, "eps rule: linear, quadratic, constant");
    counter->add_option("--system", system, "orthonormal or perturbed");
    counter->add_option("--truncate", truncate, "keep only the first k functionals");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", suite, "all, prop21, obs22, thm23, prop34, prop41");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }
    if (!norm.empty()) cfg.norm = norm;

    try {
        recess::set_tolerance(cfg.tol);
        if (*analyze) return cmd_analyze(cfg, set_file, oracle_only);
        if (*ray) return cmd_ray(cfg, set_file, base, dir);
        if (*counter) return cmd_counterexample(cfg, dims, eps, system, truncate);
        if (*verify) return cmd_verify(cfg, suite);
    } catch (const recess::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == recess::ErrorCode::Parse ? kExitParse : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
