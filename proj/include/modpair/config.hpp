#pragma once

#include "modpair/numgrid.hpp"

#include <cstdint>
#include <string>

namespace modpair {

struct ToleranceLadder {
    double spectral = 1e-3;
    double membership = 1e-6;
    double kernel = 1e-6;
    double leakage = 1e-3;
    double appendix = 1e-3;
    double borchers = 1e-8;
    double wiesbrock = 1e-7;
    double contraction = 1e-6;
    double orthogonality = 1e-3;
    double dense = 1e-6;
    double generator = 1e-9;
    double structural = 1e-12;
    double roundoff_floor = 1e-12;
    double cutoff_tail = 1e-10;
    double counterexample = 0.05; // minimum defect of a genuine non-inclusion
};

struct ProbeConfig {
    double lambda_max = 20.0;
    std::size_t count = 8;
    std::size_t generator_count = 100;
    std::uint64_t seed = 7;
};

struct AppendixConfig {
    double s = 1.0;
    std::size_t n_start = 2048;
};

struct RunConfig {
    GridSpec grid{30.0, 4096};
    ToleranceLadder tol;
    ProbeConfig probes;
    AppendixConfig appendix;
    std::string phase1 = "blaschke:-1i";
    std::string phase2 = "id";
    std::string report_path;
    std::string csv_path;
    bool timings = false; // wall-clock timings make reports differ between runs
};

// Thrown for malformed or out-of-range configuration; names the offending field.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& why)
        : Error("config: " + field + ": " + why), field_(field)
    {
    }
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// "[section]" headers, "key = value" lines, ';' or '#' comments; unknown keys are errors
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
// normalized text: every field, fixed order, shortest round-trip numbers, canonical phases
std::string format_config(const RunConfig& cfg);
void validate(const RunConfig& cfg);

} // namespace modpair
