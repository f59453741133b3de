#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetalab/cli/commands.hpp"

namespace {

using namespace zetalab::cli;

// Parameter flags shared by all subcommands; each subcommand validates its own subset.
const std::vector<std::string> param_flags = {"s",    "sigma",  "t",  "method", "cutoff", "lambda", "alpha",
                                              "lambda1", "lambda2", "nu", "repr",   "part",   "z",      "v",
                                              "x",    "q",      "space", "r",    "d",      "rho",    "step",
                                              "s-grid"};

int write_output(const std::string& text, const RunConfig& cfg)
{
    if (!cfg.out) {
        std::cout << text;
        std::cout.flush();
        return std::cout ? exit_ok : exit_io;
    }
    std::ofstream out(*cfg.out, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "I/O error: cannot open --out " << *cfg.out << "\n";
        return exit_io;
    }
    out << text;
    out.close();
    if (!out) {
        std::cerr << "I/O error: write failed for --out " << *cfg.out << "\n";
        return exit_io;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zetalab: regularized zeta functions, functional equations and heat kernels"};
    app.set_version_flag("--version", std::string(zetalab::version));
    app.require_subcommand(1);

    RunConfig cfg;
    std::string cache_dir;
    std::string out;
    app.add_option("--abs-tol", cfg.quadrature.abs_tol, "absolute tolerance");
    app.add_option("--rel-tol", cfg.quadrature.rel_tol, "relative tolerance");
    app.add_option("--max-terms", cfg.quadrature.max_terms, "series term cap");
    app.add_option("--max-levels", cfg.quadrature.max_levels, "quadrature refinement levels");
    app.add_option("--out", out, "output file (default stdout)");
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", cache_dir, "record cache directory")->envname("ZETALAB_CACHE_DIR");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timing", cfg.timing, "record wall time per point (breaks byte-identical reruns)");

    struct Sub {
        CLI::App* app;
        std::map<std::string, std::string> values;
    };
    std::map<std::string, Sub> subs;
    const std::map<std::string, std::string> about = {
        {"eval", "evaluate one function at one point"},
        {"verify", "check a functional equation over a parameter grid"},
        {"scan", "locate zeros of Hardy's Z function"},
        {"grid", "evaluate a function over a cartesian parameter grid"},
    };
    std::string selector;
    for (const auto& [name, text] : about) {
        Sub& sub = subs[name];
        sub.app = app.add_subcommand(name, text);
        sub.app->fallthrough();
        if (name == "eval" || name == "grid")
            sub.app->add_option("--fn", selector, "function selector")->required();
        if (name == "verify") {
            sub.app->add_option("--kind", selector, "functional equation kind")->required();
            sub.app->add_option("--threshold", cfg.threshold, "relative residual threshold");
        }
        for (const auto& flag : param_flags) sub.app->add_option("--" + flag, sub.values[flag]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    for (auto& [name, sub] : subs) {
        if (!sub.app->parsed()) continue;
        cfg.command = name;
        for (const auto& flag : param_flags)
            if (sub.app->count("--" + flag) > 0) cfg.params.emplace_back(flag, sub.values[flag]);
    }
    cfg.selector = selector;
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (!out.empty()) cfg.out = out;

    try {
        RunOutcome result = run(cfg);
        int io = write_output(render(result, cfg.format), cfg);
        if (io != exit_ok) return io;
        if (!result.summary.empty()) std::cerr << result.summary << "\n";
        return result.exit_code;
    } catch (const std::exception& e) {
        auto [code, message] = classify(e);
        std::cerr << message << "\n";
        return code;
    }
}
