#pragma once

#include "modpair/config.hpp"
#include "modpair/inclusion.hpp"
#include "modpair/report.hpp"

#include <string>
#include <vector>

namespace modpair {

class UsageError : public Error {
public:
    using Error::Error;
};

// Phases used for the battery-wide checks.
const std::vector<std::string>& battery_phases();
// Ordered pairs whose verdicts are known in closed form: {phase1, phase2, included}.
struct KnownPair {
    std::string phase1, phase2;
    bool included;
};
const std::vector<KnownPair>& known_pairs();
const std::vector<std::string>& example_names();

struct AppendixRow {
    std::size_t N = 0;
    double discrepancy = 0.0;  // convolution route vs multiplier route
    double norm_defect = 0.0;  // | ||T psi|| - 1 |
    double seconds = 0.0;
};
std::vector<AppendixRow> appendix_study(double s, double L, const std::vector<std::size_t>& Ns);
// U(-s) through the convolution route undoes U(s) through the multiplier
double appendix_group_law(double s, const GridSpec& grid);
// U(-s) vs J U(s) J in the lambda picture
double appendix_reflection(double s, const GridSpec& grid);

// worst flow and conjugation residual on the 5 x 5 lattice t in [-0.5, 0.5], s in [-2, 2]
double borchers_lattice(const GridSpec& grid);

// recursive kernel route vs padded multiplier route for blaschke(-i)
double kernel_vs_multiplier(const GridSpec& grid);

struct ContractionResult {
    double ratio = 0.0;
    double cutoff = 0.0;
    double tail = 0.0; // mass of e^{-y P1} psi beyond the cutoff, relative to ||psi||^2
};
// cutoff 20/y keeps e^{y cutoff} roundoff amplification below 1e-7
ContractionResult contraction_study(const StandardPairModel& p1, const StandardPairModel& p2, double y,
                                    const std::vector<WaveFunction>& probes);

// smallest <P1> - <P2> over random analytic probes inside both form domains
double generator_gap_min(const StandardPairModel& p1, const StandardPairModel& p2, std::size_t count,
                         std::uint64_t seed);

// largest cocycle residual over the battery, t in {0.1, 0.2, 0.4}
double wiesbrock_battery(const GridSpec& grid, std::size_t probes, std::uint64_t seed);

struct DenseComparison {
    double power = 0.0;
    double dense = 0.0;
};
DenseComparison dense_oracle(const std::string& phase1, const std::string& phase2, const GridSpec& grid);

std::vector<std::size_t> parse_n_list(const std::string& text);
InclusionConfig inclusion_config(const RunConfig& cfg);

VerificationReport cmd_selfcheck(const RunConfig& cfg);
VerificationReport cmd_appendix_a(const RunConfig& cfg);
VerificationReport cmd_inclusion(const RunConfig& cfg);
VerificationReport cmd_example(const std::string& name, const RunConfig& cfg);
// CSV with one row per N
std::string cmd_sweep(const std::string& case_name, const std::vector<std::size_t>& Ns,
                      const RunConfig& cfg);

} // namespace modpair
