#include "modpair/suites.hpp"
#include "modpair/special.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

using namespace modpair;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail)
{
    if (!ok)
        ++failures;
    std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... a)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

// below this both values are roundoff and "shrinks" carries no information
constexpr double roundoff_floor = 1e-12;

bool shrinks(double coarse, double fine)
{
    return fine < coarse || (coarse <= roundoff_floor && fine <= roundoff_floor);
}

struct Pair {
    StandardPairModel p1, p2;
};

Pair shared(const std::string& a, const std::string& b, const GridSpec& g)
{
    const BoundaryPhase pa = parse_phase(a), pb = parse_phase(b);
    const std::size_t pad = std::max(default_pad(pa, g), default_pad(pb, g));
    return {StandardPairModel(pa, g, pad), StandardPairModel(pb, g, pad)};
}

void appendix()
{
    const auto t0 = Clock::now();
    const auto rows = appendix_study(1.0, 30.0, {2048, 4096, 8192, 16384});
    const double t = seconds_since(t0);
    bool mono = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        mono = mono && rows[i].discrepancy < rows[i - 1].discrepancy;
    report(1, mono && rows[2].discrepancy <= 1e-3 && t <= 10.0,
           fmt("d = %.2e %.2e %.2e %.2e, %.2f s", rows[0].discrepancy, rows[1].discrepancy,
               rows[2].discrepancy, rows[3].discrepancy, t));
}

void gamma_modulus()
{
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double l = 0.1 * std::pow(100.0, i / 39.0);
        const double exact = pi / (l * std::sinh(pi * l));
        worst = std::max(worst, std::abs(std::norm(complex_gamma({0.0, l})) / exact - 1.0));
    }
    report(2, worst <= 1e-10, fmt("worst relative error %.2e", worst));
}

void borchers()
{
    const double c = borchers_lattice(make_grid(30.0, 4096));
    const double f = borchers_lattice(make_grid(30.0, 8192));
    report(3, c <= 1e-8 && f <= 0.5 * c, fmt("N4096 %.2e, N8192 %.2e", c, f));
}

void detector_agreement()
{
    const auto t0 = Clock::now();
    std::size_t ok = 0, total = 0;
    std::string bad;
    for (const auto& k : known_pairs()) {
        const BoundaryPhase a = parse_phase(k.phase1), b = parse_phase(k.phase2);
        const Answer want = k.included ? Answer::yes : Answer::no;
        bool good = true;
        // each check covers N and 2N, so these two cover 2048, 4096 and 8192
        for (std::size_t N : {2048, 4096}) {
            const InclusionVerdict v = check_inclusion(a, b, make_grid(30.0, N));
            good = good && v.agreement && v.spectral == want && v.membership == want && v.inner == want;
        }
        ++total;
        if (good)
            ++ok;
        else
            bad += " (" + k.phase1 + ", " + k.phase2 + ")";
    }
    const double t = seconds_since(t0);
    report(4, total >= 10 && ok == total && t <= 60.0,
           fmt("%zu of %zu pairs agree, %.1f s", ok, total, t) + (bad.empty() ? "" : ", failing" + bad));
}

void example_blaschke()
{
    const GridSpec g = make_grid(30.0, 8192);
    const double kernel = kernel_vs_multiplier(g);
    const Pair pc = shared("blaschke:-1i", "id", g);
    const double member = membership_inclusion_defect(pc.p1, pc.p2, 4, 7);
    const InclusionVerdict v = check_inclusion(parse_phase("blaschke:-1i"), identity_phase(), make_grid(30.0, 4096));
    const bool ok = kernel <= 1e-6 && member <= 1e-6 && v.spectral_defect_fine <= 1e-3
                    && shrinks(v.spectral_defect, v.spectral_defect_fine);
    report(5, ok,
           fmt("kernel %.2e, membership %.2e, spectral N4096 %.2e N8192 %.2e", kernel, member,
               v.spectral_defect, v.spectral_defect_fine));
}

void example_sinh()
{
    const GridSpec g = make_grid(30.0, 4096);
    const Pair pc = shared("id", "sinh", g);
    const double gap = generator_gap_min(pc.p1, pc.p2, 100, 7);
    bool ok = gap >= -1e-9;
    std::string d = fmt("gap %.3f", gap);
    for (const auto& [a, b] : {std::pair{"sinh", "id"}, std::pair{"id", "sinh"}}) {
        const InclusionVerdict v = check_inclusion(parse_phase(a), parse_phase(b), g);
        const double ratio = v.spectral_defect_fine / v.spectral_defect;
        ok = ok && std::min(v.spectral_defect, v.spectral_defect_fine) >= 0.05 && ratio >= 0.5 && ratio <= 2.0;
        d += fmt(", (%s, %s) %.3f -> %.3f", a, b, v.spectral_defect, v.spectral_defect_fine);
    }
    report(6, ok, d);
}

void contraction()
{
    const Pair pc = shared("blaschke:-1i", "id", make_grid(30.0, 4096));
    const auto probes = pair_probes(pc.p1, 8, 7);
    bool ok = true;
    std::string d;
    for (double y : {0.1, 1.0, 10.0}) {
        const ContractionResult c = contraction_study(pc.p1, pc.p2, y, probes);
        ok = ok && c.ratio <= 1.0 + 1e-6 && c.tail <= 1e-10;
        d += fmt("%sy=%g ratio %.6f tail %.1e", d.empty() ? "" : "; ", y, c.ratio, c.tail);
    }
    report(7, ok, d);
}

void orthogonality()
{
    double v[2];
    for (int i = 0; i < 2; ++i) {
        const Pair pc = shared("blaschke:-1i", "id", make_grid(30.0, 4096u << i));
        v[i] = orthogonality_defect(pc.p1, pc.p2, {0.5, 1.0}, {2.0, 3.0}).value;
    }
    report(8, v[0] <= 1e-3 && shrinks(v[0], v[1]), fmt("N4096 %.2e, N8192 %.2e", v[0], v[1]));
}

void wiesbrock()
{
    const double w = wiesbrock_battery(make_grid(30.0, 4096), 8, 7);
    report(9, w <= 1e-7, fmt("worst residual %.2e over %zu phases", w, battery_phases().size()));
}

void dense()
{
    const GridSpec g = make_grid(30.0, 512);
    bool ok = true;
    std::string d;
    for (const auto& [a, b] : {std::pair{"id", "sinh"}, std::pair{"blaschke:-0.5-0.5i;0.5-0.5i", "blaschke:-1i"},
                               std::pair{"blaschke:-1i", "blaschke:-0.5-0.5i;0.5-0.5i"}}) {
        const DenseComparison c = dense_oracle(a, b, g);
        ok = ok && std::abs(c.power - c.dense) <= 1e-6;
        d += fmt("%s|%.4f - %.4f| = %.1e", d.empty() ? "" : "; ", c.power, c.dense, std::abs(c.power - c.dense));
    }
    report(10, ok, d);
}

} // namespace

int main()
{
    appendix();
    gamma_modulus();
    borchers();
    detector_agreement();
    example_blaschke();
    example_sinh();
    contraction();
    orthogonality();
    wiesbrock();
    dense();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
