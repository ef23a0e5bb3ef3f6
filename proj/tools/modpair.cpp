#include "modpair/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace modpair;

namespace {

struct Flags {
    std::string config_path;
    std::optional<std::size_t> grid_n;
    std::optional<double> grid_l;
    std::optional<std::uint64_t> seed;
    std::optional<double> s;
    std::string out;
    std::string phase1, phase2;
    std::string n_list = "2048,4096,8192";
    std::string example;
    std::string sweep_case;
    bool json = false, csv = false;
};

RunConfig resolve(const Flags& f)
{
    RunConfig cfg = f.config_path.empty() ? RunConfig{} : load_config(f.config_path);
    if (f.grid_n)
        cfg.grid.N = *f.grid_n;
    if (f.grid_l)
        cfg.grid.L = *f.grid_l;
    if (f.seed)
        cfg.probes.seed = *f.seed;
    if (f.s)
        cfg.appendix.s = *f.s;
    if (!f.phase1.empty())
        cfg.phase1 = f.phase1;
    if (!f.phase2.empty())
        cfg.phase2 = f.phase2;
    if (!f.out.empty())
        (f.csv ? cfg.csv_path : cfg.report_path) = f.out;
    // round trip through the normalized text so flag values get the same checks as file values
    return parse_config(format_config(cfg));
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(path);
    if (!o)
        throw UsageError("cannot write '" + path + "'");
    o << text;
}

int finish(const VerificationReport& r, const RunConfig& cfg, const Flags& f)
{
    if (f.csv)
        emit(to_csv(r), cfg.csv_path);
    else
        emit(to_json(r, cfg.timings), cfg.report_path);
    for (const auto& k : r.failures())
        std::cerr << "FAIL " << k << " = " << r.metrics.at(k).value << " ("
                  << to_string(r.metrics.at(k).relation) << " " << r.metrics.at(k).tolerance << ")\n";
    return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Standard pairs, boundary phases and half-sided modular inclusions"};
    app.require_subcommand(1);
    Flags f;
    const auto common = [&f](CLI::App* c) {
        c->add_option("--config", f.config_path, "configuration file");
        c->add_option("--grid-N", f.grid_n, "grid points");
        c->add_option("--grid-L", f.grid_l, "half-width of the theta window");
        c->add_option("--seed", f.seed, "probe seed");
        c->add_option("--out", f.out, "write the report here instead of stdout");
        auto* j = c->add_flag("--json", f.json, "JSON report (default)");
        auto* v = c->add_flag("--csv", f.csv, "CSV report");
        j->excludes(v);
    };
    auto* selfcheck = app.add_subcommand("selfcheck", "grid and Schrodinger-picture invariants");
    auto* appendix = app.add_subcommand("appendix-a", "convolution route of the Weyl operator");
    auto* inclusion = app.add_subcommand("inclusion", "three-detector inclusion check");
    auto* example = app.add_subcommand("example", "named example suite");
    auto* sweep = app.add_subcommand("sweep", "convergence table as CSV");
    for (auto* c : {selfcheck, appendix, inclusion, example, sweep})
        common(c);
    appendix->add_option("--s", f.s, "Weyl parameter");
    for (auto* c : {inclusion, sweep}) {
        c->add_option("--phase1", f.phase1, "phase of the first pair");
        c->add_option("--phase2", f.phase2, "phase of the second pair");
    }
    example->add_option("name", f.example, "example name")
        ->required()
        ->check(CLI::IsMember(example_names()));
    sweep->add_option("case", f.sweep_case, "appendix-a, inclusion or borchers")->required();
    sweep->add_option("--n-list", f.n_list, "comma-separated grid sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const RunConfig cfg = resolve(f);
        if (selfcheck->parsed())
            return finish(cmd_selfcheck(cfg), cfg, f);
        if (appendix->parsed())
            return finish(cmd_appendix_a(cfg), cfg, f);
        if (inclusion->parsed())
            return finish(cmd_inclusion(cfg), cfg, f);
        if (example->parsed())
            return finish(cmd_example(f.example, cfg), cfg, f);
        if (sweep->parsed()) {
            const auto Ns = parse_n_list(f.n_list);
            emit(cmd_sweep(f.sweep_case, Ns, cfg), f.out.empty() ? cfg.csv_path : f.out);
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
