#include "modpair/config.hpp"

#include "modpair/phases.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace modpair {

namespace {

namespace pt = boost::property_tree;

std::string shortest(double v)
{
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

double to_real(const std::string& field, const std::string& text)
{
    double v = 0.0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || r.ec != std::errc() || r.ptr != text.data() + text.size())
        throw ConfigError(field, "expected a number, got '" + text + "'");
    return v;
}

std::uint64_t to_count(const std::string& field, const std::string& text)
{
    std::uint64_t v = 0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || r.ec != std::errc() || r.ptr != text.data() + text.size())
        throw ConfigError(field, "expected a non-negative integer, got '" + text + "'");
    return v;
}

bool to_flag(const std::string& field, const std::string& text)
{
    if (text == "true" || text == "1" || text == "yes")
        return true;
    if (text == "false" || text == "0" || text == "no")
        return false;
    throw ConfigError(field, "expected true or false, got '" + text + "'");
}

// One entry per field, in output order.
struct Field {
    std::string section;
    std::string key;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

template <class Group>
Field tol_field(std::string key, double Group::*member, Group RunConfig::*group)
{
    const std::string name = "tolerance." + key;
    return {"tolerance", key,
            [=](RunConfig& c, const std::string& v) { (c.*group).*member = to_real(name, v); },
            [=](const RunConfig& c) { return shortest((c.*group).*member); }};
}

const std::vector<Field>& fields()
{
    static const std::vector<Field> fs = [] {
        std::vector<Field> f;
        f.push_back({"grid", "L", [](RunConfig& c, const std::string& v) { c.grid.L = to_real("grid.L", v); },
                     [](const RunConfig& c) { return shortest(c.grid.L); }});
        f.push_back({"grid", "N",
                     [](RunConfig& c, const std::string& v) { c.grid.N = to_count("grid.N", v); },
                     [](const RunConfig& c) { return std::to_string(c.grid.N); }});
        using T = ToleranceLadder;
        const std::pair<const char*, double T::*> tols[] = {
            {"spectral", &T::spectral},       {"membership", &T::membership},
            {"kernel", &T::kernel},
            {"leakage", &T::leakage},         {"appendix", &T::appendix},
            {"borchers", &T::borchers},       {"wiesbrock", &T::wiesbrock},
            {"contraction", &T::contraction}, {"orthogonality", &T::orthogonality},
            {"dense", &T::dense},             {"generator", &T::generator},
            {"structural", &T::structural},   {"roundoff_floor", &T::roundoff_floor},
            {"cutoff_tail", &T::cutoff_tail}, {"counterexample", &T::counterexample}};
        for (const auto& [k, m] : tols)
            f.push_back(tol_field(k, m, &RunConfig::tol));
        f.push_back({"probes", "lambda_max",
                     [](RunConfig& c, const std::string& v) { c.probes.lambda_max = to_real("probes.lambda_max", v); },
                     [](const RunConfig& c) { return shortest(c.probes.lambda_max); }});
        f.push_back({"probes", "count",
                     [](RunConfig& c, const std::string& v) { c.probes.count = to_count("probes.count", v); },
                     [](const RunConfig& c) { return std::to_string(c.probes.count); }});
        f.push_back({"probes", "generator_count",
                     [](RunConfig& c, const std::string& v) {
                         c.probes.generator_count = to_count("probes.generator_count", v);
                     },
                     [](const RunConfig& c) { return std::to_string(c.probes.generator_count); }});
        f.push_back({"probes", "seed",
                     [](RunConfig& c, const std::string& v) { c.probes.seed = to_count("probes.seed", v); },
                     [](const RunConfig& c) { return std::to_string(c.probes.seed); }});
        f.push_back({"appendix", "s",
                     [](RunConfig& c, const std::string& v) { c.appendix.s = to_real("appendix.s", v); },
                     [](const RunConfig& c) { return shortest(c.appendix.s); }});
        f.push_back({"appendix", "n_start",
                     [](RunConfig& c, const std::string& v) { c.appendix.n_start = to_count("appendix.n_start", v); },
                     [](const RunConfig& c) { return std::to_string(c.appendix.n_start); }});
        f.push_back({"phases", "phase1",
                     [](RunConfig& c, const std::string& v) { c.phase1 = v; },
                     [](const RunConfig& c) { return c.phase1; }});
        f.push_back({"phases", "phase2",
                     [](RunConfig& c, const std::string& v) { c.phase2 = v; },
                     [](const RunConfig& c) { return c.phase2; }});
        f.push_back({"output", "report",
                     [](RunConfig& c, const std::string& v) { c.report_path = v; },
                     [](const RunConfig& c) { return c.report_path; }});
        f.push_back({"output", "csv",
                     [](RunConfig& c, const std::string& v) { c.csv_path = v; },
                     [](const RunConfig& c) { return c.csv_path; }});
        f.push_back({"output", "timings",
                     [](RunConfig& c, const std::string& v) { c.timings = to_flag("output.timings", v); },
                     [](const RunConfig& c) { return std::string(c.timings ? "true" : "false"); }});
        return f;
    }();
    return fs;
}

std::string canonical_phase(const std::string& field, const std::string& spec)
{
    try {
        return format_phase(parse_phase(spec));
    } catch (const Error& e) {
        throw ConfigError(field, e.what());
    }
}

} // namespace

void validate(const RunConfig& cfg)
{
    if (!(cfg.grid.L > 0.0))
        throw ConfigError("grid.L", "must be positive");
    if (cfg.grid.N < 16 || cfg.grid.N % 2 != 0)
        throw ConfigError("grid.N", "must be even and at least 16, got " + std::to_string(cfg.grid.N));
    for (const auto& f : fields()) {
        if (f.section != "tolerance")
            continue;
        const double v = to_real("tolerance." + f.key, f.get(cfg));
        if (!(v > 0.0))
            throw ConfigError("tolerance." + f.key, "must be positive");
    }
    if (!(cfg.probes.lambda_max > 0.0))
        throw ConfigError("probes.lambda_max", "must be positive");
    if (cfg.probes.count == 0)
        throw ConfigError("probes.count", "must be at least 1");
    if (cfg.probes.generator_count == 0)
        throw ConfigError("probes.generator_count", "must be at least 1");
    if (cfg.appendix.s == 0.0)
        throw ConfigError("appendix.s", "s must be nonzero");
    if (cfg.appendix.n_start < 16 || cfg.appendix.n_start % 2 != 0)
        throw ConfigError("appendix.n_start", "must be even and at least 16");
    canonical_phase("phases.phase1", cfg.phase1);
    canonical_phase("phases.phase2", cfg.phase2);
}

RunConfig parse_config(const std::string& text)
{
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("<file>", e.message() + " (line " + std::to_string(e.line()) + ")");
    }
    std::map<std::string, const Field*> by_name;
    for (const auto& f : fields())
        by_name[f.section + "." + f.key] = &f;

    RunConfig cfg;
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty())
            throw ConfigError(section, "key outside of any section");
        for (const auto& [key, value] : body) {
            const std::string name = section + "." + key;
            auto it = by_name.find(name);
            if (it == by_name.end())
                throw ConfigError(name, "unknown field");
            it->second->set(cfg, value.data());
        }
    }
    cfg.phase1 = canonical_phase("phases.phase1", cfg.phase1);
    cfg.phase2 = canonical_phase("phases.phase2", cfg.phase2);
    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("<file>", "cannot read '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return parse_config(s.str());
}

std::string format_config(const RunConfig& cfg)
{
    std::ostringstream o;
    std::string section;
    for (const auto& f : fields()) {
        if (f.section != section) {
            if (!section.empty())
                o << "\n";
            section = f.section;
            o << "[" << section << "]\n";
        }
        std::string v = f.get(cfg);
        if (f.section == "phases")
            v = canonical_phase(f.section + "." + f.key, v);
        o << f.key << " = " << v << "\n";
    }
    return o.str();
}

} // namespace modpair
