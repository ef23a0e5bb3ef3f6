#pragma once

#include "modpair/config.hpp"

#include <map>
#include <string>
#include <vector>

namespace modpair {

inline constexpr int schema_version = 1;
inline constexpr const char* artifact_version = "0.1.0";

enum class CheckState { pass, fail, indeterminate, info };
const char* to_string(CheckState s);
CheckState parse_check_state(const std::string& s);

// How a metric is compared with its tolerance.
enum class Relation { at_most, at_least, equals_flag, none };
const char* to_string(Relation r);
Relation parse_relation(const std::string& s);

struct Metric {
    double value = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::none;
    CheckState state = CheckState::info;
    std::string note;
};

struct VerificationReport {
    std::string case_id;
    std::string config;                      // normalized config text
    std::map<std::string, Metric> metrics;   // module.check.metric
    std::map<std::string, std::string> verdicts;
    std::map<std::string, double> timings;   // seconds; serialized only when enabled
    std::string version = artifact_version;

    // value <= tol passes
    void at_most(const std::string& key, double value, double tol, const std::string& note = {});
    // value >= tol passes
    void at_least(const std::string& key, double value, double tol, const std::string& note = {});
    // a boolean outcome; indeterminate when unknown is set
    void flag(const std::string& key, bool ok, const std::string& note = {}, bool unknown = false);
    // recorded without a verdict
    void info(const std::string& key, double value, const std::string& note = {});

    bool passed() const;
    std::vector<std::string> failures() const;
};

std::string to_json(const VerificationReport& r, bool with_timings);
VerificationReport report_from_json(const std::string& text);
// key,value,tolerance,relation,state rows
std::string to_csv(const VerificationReport& r);

} // namespace modpair
