#include "modpair/report.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace modpair {

using json = nlohmann::ordered_json;

const char* to_string(CheckState s)
{
    switch (s) {
    case CheckState::pass:
        return "pass";
    case CheckState::fail:
        return "fail";
    case CheckState::indeterminate:
        return "indeterminate";
    case CheckState::info:
        return "info";
    }
    return "info";
}

CheckState parse_check_state(const std::string& s)
{
    for (CheckState c : {CheckState::pass, CheckState::fail, CheckState::indeterminate, CheckState::info})
        if (s == to_string(c))
            return c;
    throw Error("report: unknown check state '" + s + "'");
}

const char* to_string(Relation r)
{
    switch (r) {
    case Relation::at_most:
        return "<=";
    case Relation::at_least:
        return ">=";
    case Relation::equals_flag:
        return "flag";
    case Relation::none:
        return "none";
    }
    return "none";
}

Relation parse_relation(const std::string& s)
{
    for (Relation r : {Relation::at_most, Relation::at_least, Relation::equals_flag, Relation::none})
        if (s == to_string(r))
            return r;
    throw Error("report: unknown relation '" + s + "'");
}

void VerificationReport::at_most(const std::string& key, double value, double tol, const std::string& note)
{
    const CheckState s = !std::isfinite(value) ? CheckState::indeterminate
                         : value <= tol        ? CheckState::pass
                                               : CheckState::fail;
    metrics[key] = {value, tol, Relation::at_most, s, note};
}

void VerificationReport::at_least(const std::string& key, double value, double tol, const std::string& note)
{
    const CheckState s = !std::isfinite(value) ? CheckState::indeterminate
                         : value >= tol        ? CheckState::pass
                                               : CheckState::fail;
    metrics[key] = {value, tol, Relation::at_least, s, note};
}

void VerificationReport::flag(const std::string& key, bool ok, const std::string& note, bool unknown)
{
    const CheckState s = unknown ? CheckState::indeterminate : ok ? CheckState::pass : CheckState::fail;
    metrics[key] = {ok ? 1.0 : 0.0, 1.0, Relation::equals_flag, s, note};
}

void VerificationReport::info(const std::string& key, double value, const std::string& note)
{
    metrics[key] = {value, 0.0, Relation::none, CheckState::info, note};
}

bool VerificationReport::passed() const
{
    return failures().empty();
}

std::vector<std::string> VerificationReport::failures() const
{
    std::vector<std::string> out;
    for (const auto& [k, m] : metrics)
        if (m.state == CheckState::fail || m.state == CheckState::indeterminate)
            out.push_back(k);
    return out;
}

namespace {

// JSON has no infinity or NaN; such values travel as strings
json number(double v)
{
    if (std::isfinite(v))
        return v;
    if (std::isnan(v))
        return "nan";
    return v > 0 ? "inf" : "-inf";
}

double from_number(const json& j)
{
    if (j.is_number())
        return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "inf")
        return INFINITY;
    if (s == "-inf")
        return -INFINITY;
    return NAN;
}

} // namespace

std::string to_json(const VerificationReport& r, bool with_timings)
{
    json j;
    j["schema_version"] = schema_version;
    j["artifact_version"] = r.version;
    j["case"] = r.case_id;
    j["config"] = r.config;
    json m = json::object();
    for (const auto& [k, v] : r.metrics) {
        json e;
        e["value"] = number(v.value);
        e["tolerance"] = number(v.tolerance);
        e["relation"] = to_string(v.relation);
        e["state"] = to_string(v.state);
        if (!v.note.empty())
            e["note"] = v.note;
        m[k] = e;
    }
    j["metrics"] = m;
    j["verdicts"] = r.verdicts;
    if (with_timings) {
        json t = json::object();
        for (const auto& [k, v] : r.timings)
            t[k] = v;
        j["timings"] = t;
    }
    j["passed"] = r.passed();
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("report: ") + e.what());
    }
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != schema_version)
        throw Error("report: unsupported schema_version");
    VerificationReport r;
    r.version = j.at("artifact_version").get<std::string>();
    r.case_id = j.at("case").get<std::string>();
    r.config = j.at("config").get<std::string>();
    for (const auto& [k, e] : j.at("metrics").items()) {
        Metric m;
        m.value = from_number(e.at("value"));
        m.tolerance = from_number(e.at("tolerance"));
        m.relation = parse_relation(e.at("relation").get<std::string>());
        m.state = parse_check_state(e.at("state").get<std::string>());
        if (e.contains("note"))
            m.note = e["note"].get<std::string>();
        r.metrics[k] = m;
    }
    for (const auto& [k, v] : j.at("verdicts").items())
        r.verdicts[k] = v.get<std::string>();
    if (j.contains("timings"))
        for (const auto& [k, v] : j["timings"].items())
            r.timings[k] = v.get<double>();
    return r;
}

std::string to_csv(const VerificationReport& r)
{
    std::ostringstream o;
    o.precision(17);
    o << "key,value,tolerance,relation,state\n";
    for (const auto& [k, m] : r.metrics)
        o << k << "," << m.value << "," << m.tolerance << "," << to_string(m.relation) << ","
          << to_string(m.state) << "\n";
    for (const auto& [k, v] : r.verdicts)
        o << k << "," << v << ",,verdict,\n";
    return o.str();
}

} // namespace modpair
