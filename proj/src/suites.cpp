#include "modpair/suites.hpp"

#include "modpair/special.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace modpair {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// d(2N) below d(N), or both already at roundoff
bool shrinks(double coarse, double fine, double floor)
{
    return fine < coarse || (coarse <= floor && fine <= floor);
}

std::string fmt_n(std::size_t n)
{
    return "N" + std::to_string(n);
}

GridSpec grid_of(const RunConfig& cfg)
{
    return make_grid(cfg.grid.L, cfg.grid.N);
}

struct PairOnCircle {
    StandardPairModel p1, p2;
};

PairOnCircle shared_pair(const std::string& a, const std::string& b, const GridSpec& g)
{
    const BoundaryPhase pa = parse_phase(a), pb = parse_phase(b);
    const std::size_t pad = std::max(default_pad(pa, g), default_pad(pb, g));
    return {StandardPairModel(pa, g, pad), StandardPairModel(pb, g, pad)};
}

void record_inclusion(VerificationReport& r, const std::string& prefix, const InclusionVerdict& v)
{
    r.info(prefix + ".spectral.coarse", v.spectral_defect);
    r.info(prefix + ".spectral.fine", v.spectral_defect_fine);
    r.info(prefix + ".membership.coarse", v.membership_defect);
    r.info(prefix + ".membership.fine", v.membership_defect_fine);
    r.info(prefix + ".leakage.coarse", v.relative_phase_leakage);
    r.info(prefix + ".leakage.fine", v.relative_phase_leakage_fine);
    r.verdicts[prefix + ".spectral"] = to_string(v.spectral);
    r.verdicts[prefix + ".membership"] = to_string(v.membership);
    r.verdicts[prefix + ".inner"] = to_string(v.inner);
    r.verdicts[prefix + ".verdict"] = to_string(v.verdict);
}

// expected verdict with all three detectors agreeing
void expect_verdict(VerificationReport& r, const std::string& key, const InclusionVerdict& v, bool included)
{
    const Answer want = included ? Answer::yes : Answer::no;
    r.flag(key, v.agreement && v.verdict == want,
           std::string("expected ") + (included ? "true" : "false") + ", got " + to_string(v.verdict),
           v.verdict == Answer::indeterminate);
}

} // namespace

const std::vector<std::string>& battery_phases()
{
    static const std::vector<std::string> b = {
        "id",       "blaschke:-1i", "blaschke:-0.5-0.5i;0.5-0.5i", "exp:0.1",
        "scaling:2", "sinh",        "conj(blaschke:-1i)",          "conj(exp:0.1)",
        "conj(scaling:2)", "conj(sinh)"};
    return b;
}

const std::vector<KnownPair>& known_pairs()
{
    static const std::vector<KnownPair> p = {
        {"blaschke:-1i", "id", true},
        {"id", "blaschke:-1i", false},
        {"id", "id", true},
        {"id", "scaling:2", true},
        {"scaling:2", "id", false},
        {"exp:0.1", "id", true},
        {"id", "exp:0.1", false},
        {"sinh", "id", false},
        {"id", "sinh", false},
        {"blaschke:-0.5-0.5i;0.5-0.5i", "blaschke:-1i", false},
        {"blaschke:-1i", "blaschke:-0.5-0.5i;0.5-0.5i", false},
        {"prod(blaschke:-1i,exp:0.2)", "exp:0.2", true},
    };
    return p;
}

const std::vector<std::string>& example_names()
{
    static const std::vector<std::string> n = {"blaschke-4.4", "sinh-4.5",      "scaling-4.3",
                                               "borchers",     "wiesbrock",     "orthogonality",
                                               "contraction",  "matrix-4.6"};
    return n;
}

std::vector<AppendixRow> appendix_study(double s, double L, const std::vector<std::size_t>& Ns)
{
    std::vector<AppendixRow> rows;
    for (std::size_t N : Ns) {
        const auto t0 = Clock::now();
        const GridSpec g = make_grid(L, N);
        const WaveFunction psi = normalized(gaussian_packet(g, 0.0, 1.0));
        const TsKernel k = build_ts_kernel(s, g);
        const WaveFunction conv = apply_ts(k, fourier(psi));
        const WaveFunction mult = fourier(weyl(s, psi));
        AppendixRow row;
        row.N = N;
        row.discrepancy = relative_distance(conv, mult);
        row.norm_defect = std::abs(conv.norm() - 1.0);
        row.seconds = seconds_since(t0);
        rows.push_back(row);
    }
    return rows;
}

double appendix_group_law(double s, const GridSpec& grid)
{
    // the inner step uses the multiplier so the convolution input vanishes at the lambda edges
    const WaveFunction psi = normalized(gaussian_packet(grid, -2.0, 1.0));
    const WaveFunction back = apply_ts(build_ts_kernel(-s, grid), fourier(weyl(s, psi)));
    return relative_distance(back, fourier(psi));
}

double appendix_reflection(double s, const GridSpec& grid)
{
    const WaveFunction psi = normalized(gaussian_packet(grid, 0.0, 1.0));
    const WaveFunction ph = fourier(psi);
    const WaveFunction a = apply_ts(build_ts_kernel(-s, grid), ph);
    const WaveFunction b = modular_conjugation(apply_ts(build_ts_kernel(s, grid), modular_conjugation(ph)));
    return relative_distance(a, b);
}

double borchers_lattice(const GridSpec& grid)
{
    const WaveFunction psi = normalized(gaussian_packet(grid, -4.0, 0.7));
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double t = -0.5 + 0.25 * i, s = -2.0 + 1.0 * j;
            const BorchersResidual r = borchers_residual(t, s, psi);
            worst = std::max({worst, r.flow, r.conjugation});
        }
    }
    return worst;
}

double kernel_vs_multiplier(const GridSpec& grid)
{
    const BoundaryPhase phi = parse_phase("blaschke:-1i");
    const WaveFunction psi = normalized(gaussian_packet(grid, -3.0, 1.0));
    const GridSpec big = widened(grid, default_pad(phi, grid));
    const WaveFunction mult = crop(phase_operator(phi, embed(psi, big)), grid);
    return relative_distance(blaschke_kernel_apply(psi), mult);
}

ContractionResult contraction_study(const StandardPairModel& p1, const StandardPairModel& p2, double y,
                                    const std::vector<WaveFunction>& probes)
{
    ContractionResult r;
    r.cutoff = y > 0.0 ? 20.0 / y : 1e3;
    r.ratio = contraction_ratio(p1, p2, y, r.cutoff, probes);
    for (const auto& psi : probes) {
        const WaveFunction q = p2.spectral_projection({0.0, r.cutoff}, psi);
        const double n = q.norm();
        if (n == 0.0)
            continue;
        const WaveFunction d = p1.semigroup(y, Semigroup::decaying, q, r.cutoff);
        const WaveFunction lost = d - p2.spectral_projection({0.0, r.cutoff}, d);
        r.tail = std::max(r.tail, std::pow(lost.norm() / n, 2));
    }
    return r;
}

double generator_gap_min(const StandardPairModel& p1, const StandardPairModel& p2, std::size_t count,
                         std::uint64_t seed)
{
    std::vector<cplx> roots = form_domain_roots(p1.phase());
    for (const cplx& z : form_domain_roots(p2.phase()))
        if (std::none_of(roots.begin(), roots.end(), [&](cplx r) { return std::abs(r - z) <= 1e-9; }))
            roots.push_back(z);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uc(-3.0, 3.0), us(0.5, 2.0), uk(-1.0, 1.0);
    double worst = infinity;
    for (std::size_t i = 0; i < count; ++i) {
        AnalyticProbe p;
        p.c = uc(rng);
        p.s = us(rng);
        p.k = uk(rng);
        p.roots = roots;
        worst = std::min(worst, generator_form_gap(p1, p2, p));
    }
    return worst;
}

double wiesbrock_battery(const GridSpec& grid, std::size_t probes, std::uint64_t seed)
{
    double worst = 0.0;
    for (const auto& spec : battery_phases()) {
        const StandardPairModel pair(parse_phase(spec), grid);
        for (const auto& psi : pair_probes(pair, probes, seed))
            for (double t : {0.1, 0.2, 0.4})
                worst = std::max(worst, wiesbrock_cocycle_residual(pair, t, psi));
    }
    return worst;
}

DenseComparison dense_oracle(const std::string& phase1, const std::string& phase2, const GridSpec& grid)
{
    const PairOnCircle pc = shared_pair(phase1, phase2, grid);
    SpectralOptions opt;
    opt.max_iterations = 4000;
    DenseComparison d;
    d.power = spectral_inclusion_defect(pc.p1, pc.p2, opt).value;
    const Interval unit{0.0, 1.0};
    LinearMap B = [&](const WaveFunction& v) {
        const WaveFunction u = pc.p1.spectral_projection(unit, v);
        return u - pc.p2.spectral_projection(unit, u);
    };
    d.dense = dense_norm(B, grid);
    return d;
}

std::vector<std::size_t> parse_n_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw UsageError("N list: '" + item + "' is not an integer");
        }
        if (used != item.size())
            throw UsageError("N list: '" + item + "' is not an integer");
        if (v < 16 || v % 2 != 0)
            throw UsageError("N list: " + item + " must be even and at least 16");
        out.push_back(v);
    }
    if (out.empty())
        throw UsageError("N list is empty");
    return out;
}

InclusionConfig inclusion_config(const RunConfig& cfg)
{
    InclusionConfig ic;
    ic.tol.spectral = cfg.tol.spectral;
    ic.tol.membership = cfg.tol.membership;
    ic.tol.leakage = cfg.tol.leakage;
    ic.inner_probes = cfg.probes.count;
    ic.seed = cfg.probes.seed;
    ic.spectral.seed = cfg.probes.seed;
    return ic;
}

VerificationReport cmd_selfcheck(const RunConfig& cfg)
{
    validate(cfg);
    VerificationReport r;
    r.case_id = "selfcheck";
    r.config = format_config(cfg);
    const auto t0 = Clock::now();
    const GridSpec g = grid_of(cfg);
    const double tol = cfg.tol.structural;
    const WaveFunction psi = normalized(gaussian_packet(g, 0.0, g.L / 8.0));

    const WaveFunction ph = fourier(psi);
    r.at_most("numgrid.fourier.roundtrip", relative_distance(inverse_fourier(ph), psi), tol);
    r.at_most("numgrid.fourier.parseval", std::abs(ph.norm() - psi.norm()), tol);
    r.at_most("numgrid.embed.crop", relative_distance(crop(embed(psi, widened(g, 4)), g), psi), tol);

    const WaveFunction f12 = modular_flow(0.1, modular_flow(0.05, psi));
    r.at_most("schrodinger.flow.group_law", relative_distance(f12, modular_flow(0.15, psi)), tol);
    r.at_most("schrodinger.flow.unitary", std::abs(modular_flow(0.1, psi).norm() - 1.0), tol);
    r.at_most("schrodinger.weyl.group_law",
              relative_distance(weyl(0.7, weyl(-0.2, psi)), weyl(0.5, psi)), tol);
    r.at_most("schrodinger.weyl.unitary", std::abs(weyl(0.7, psi).norm() - 1.0), tol);
    r.at_most("schrodinger.conjugation.involution",
              relative_distance(modular_conjugation(modular_conjugation(psi)), psi), tol);
    const WaveFunction h = sample_H0_element(ph, std::min(cfg.probes.lambda_max, 5.0));
    MembershipOptions mo;
    mo.band = std::min(cfg.probes.lambda_max, 5.0);
    mo.leak_limit = infinity;
    r.at_most("schrodinger.membership.sample", membership_H0(h, tol, mo).reflection_residual, tol);

    // resolution-dependent relations need a reasonably fine lattice
    if (g.N >= 1024) {
        r.at_most("schrodinger.borchers.residual", borchers_lattice(g), cfg.tol.borchers);
        const WaveFunction b = closed_form_H0(g, -6.0, 1.5);
        r.at_most("schrodinger.membership.closed_form", membership_H0(b, 0.0, mo).reflection_residual,
                  cfg.tol.membership);
    }
    r.timings["selfcheck"] = seconds_since(t0);
    return r;
}

VerificationReport cmd_appendix_a(const RunConfig& cfg)
{
    validate(cfg);
    VerificationReport r;
    r.case_id = "appendix-a";
    r.config = format_config(cfg);
    const auto t0 = Clock::now();
    const double s = cfg.appendix.s;
    const std::size_t n0 = cfg.appendix.n_start;
    const std::vector<std::size_t> Ns = {n0, 2 * n0, 4 * n0, 8 * n0};
    const auto rows = appendix_study(s, cfg.grid.L, Ns);
    bool monotone = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        r.info("appendix.discrepancy." + fmt_n(rows[i].N), rows[i].discrepancy);
        r.info("appendix.norm_defect." + fmt_n(rows[i].N), rows[i].norm_defect);
        r.timings["appendix." + fmt_n(rows[i].N)] = rows[i].seconds;
        if (i > 0 && !(rows[i].discrepancy < rows[i - 1].discrepancy))
            monotone = false;
    }
    r.flag("appendix.discrepancy.monotone", monotone);
    r.at_most("appendix.discrepancy.threshold", rows[2].discrepancy, cfg.tol.appendix,
              "at " + fmt_n(rows[2].N));
    r.at_most("appendix.unitarity", rows[2].norm_defect, cfg.tol.appendix, "at " + fmt_n(rows[2].N));
    const GridSpec g = make_grid(cfg.grid.L, rows[2].N);
    r.at_most("appendix.group_law", appendix_group_law(s, g), cfg.tol.appendix, "U(-s) U(s) = 1");
    r.at_most("appendix.reflection", appendix_reflection(s, g), cfg.tol.appendix, "U(-s) = J U(s) J");
    r.timings["appendix"] = seconds_since(t0);
    return r;
}

VerificationReport cmd_inclusion(const RunConfig& cfg)
{
    validate(cfg);
    VerificationReport r;
    r.case_id = "inclusion";
    r.config = format_config(cfg);
    const auto t0 = Clock::now();
    const GridSpec g = grid_of(cfg);
    const BoundaryPhase a = parse_phase(cfg.phase1), b = parse_phase(cfg.phase2);
    const InclusionVerdict v = check_inclusion(a, b, g, inclusion_config(cfg));
    record_inclusion(r, "inclusion", v);
    r.flag("inclusion.detectors.agree", v.agreement, "", v.verdict == Answer::indeterminate);
    r.flag("inclusion.spectral.converged", v.spectral_converged);

    if (a.kind != PhaseKind::matrix && b.kind != PhaseKind::matrix) {
        const PairOnCircle pc = shared_pair(cfg.phase1, cfg.phase2, g);
        const double gap = generator_gap_min(pc.p1, pc.p2, cfg.probes.count, cfg.probes.seed);
        const double rev = generator_gap_min(pc.p2, pc.p1, cfg.probes.count, cfg.probes.seed);
        // the generator ordering is implied by inclusion only
        if (v.verdict == Answer::yes)
            r.at_least("inclusion.generator.gap_min", gap, -cfg.tol.generator, "<P1> - <P2>");
        else
            r.info("inclusion.generator.gap_min", gap, "<P1> - <P2>");
        r.info("inclusion.generator.gap_min_reversed", rev, "<P2> - <P1>");
    }
    r.timings["inclusion"] = seconds_since(t0);
    return r;
}

namespace {

void example_blaschke(VerificationReport& r, const RunConfig& cfg)
{
    const GridSpec g = grid_of(cfg);
    r.at_most("example.kernel.discrepancy", kernel_vs_multiplier(g), cfg.tol.kernel,
              "recursive kernel vs padded multiplier");
    const PairOnCircle pc = shared_pair("blaschke:-1i", "id", g);
    r.at_most("example.membership.defect",
              membership_inclusion_defect(pc.p1, pc.p2, 4, cfg.probes.seed), cfg.tol.membership,
              "transported samples pulled back by U2(-1)");
    const InclusionVerdict v = check_inclusion(parse_phase("blaschke:-1i"), identity_phase(), g,
                                               inclusion_config(cfg));
    record_inclusion(r, "example.detectors", v);
    expect_verdict(r, "example.detectors.expected", v, true);
    r.at_most("example.spectral.defect", v.spectral_defect, cfg.tol.spectral);
    r.flag("example.spectral.shrinks", shrinks(v.spectral_defect, v.spectral_defect_fine, cfg.tol.roundoff_floor));
    r.at_least("example.generator.gap_min",
               generator_gap_min(pc.p1, pc.p2, cfg.probes.count, cfg.probes.seed), -cfg.tol.generator);
}

void example_sinh(VerificationReport& r, const RunConfig& cfg)
{
    const GridSpec g = grid_of(cfg);
    const InclusionConfig ic = inclusion_config(cfg);
    const InclusionVerdict fwd = check_inclusion(sinh_phase(), identity_phase(), g, ic);
    const InclusionVerdict bwd = check_inclusion(identity_phase(), sinh_phase(), g, ic);
    record_inclusion(r, "example.sinh_id", fwd);
    record_inclusion(r, "example.id_sinh", bwd);
    // expected failure: detecting the non-inclusion is the pass condition
    expect_verdict(r, "example.sinh_id.expected", fwd, false);
    expect_verdict(r, "example.id_sinh.expected", bwd, false);
    const double c = cfg.tol.counterexample;
    for (const auto& [name, v] : {std::pair{"sinh_id", fwd}, std::pair{"id_sinh", bwd}}) {
        const std::string k = std::string("example.") + name;
        r.at_least(k + ".defect", std::min(v.spectral_defect, v.spectral_defect_fine), c);
        const double ratio = v.spectral_defect_fine / v.spectral_defect;
        r.flag(k + ".stable", ratio >= 0.5 && ratio <= 2.0, "fine / coarse spectral defect");
    }
    const PairOnCircle pc = shared_pair("id", "sinh", g);
    r.at_least("example.generator.gap_min",
               generator_gap_min(pc.p1, pc.p2, cfg.probes.generator_count, cfg.probes.seed),
               -cfg.tol.generator, "<P_id> - <P_sinh>, generator ordering without inclusion");
    r.info("example.generator.gap_min_reversed",
           generator_gap_min(pc.p2, pc.p1, cfg.probes.generator_count, cfg.probes.seed),
           "<P_sinh> - <P_id>");
}

void example_scaling(VerificationReport& r, const RunConfig& cfg)
{
    const GridSpec g = grid_of(cfg);
    const InclusionConfig ic = inclusion_config(cfg);
    const InclusionVerdict v = check_inclusion(identity_phase(), scaling_phase(2.0), g, ic);
    record_inclusion(r, "example.id_scaling", v);
    expect_verdict(r, "example.id_scaling.expected", v, true);
    const PairOnCircle pc = shared_pair("id", "scaling:2", g);
    r.at_most("example.relative_phase.leakage",
              inner_test(relative_phase(pc.p1, pc.p2), g, cfg.probes.count, cfg.probes.seed).leakage,
              cfg.tol.leakage);
    const InclusionVerdict w = check_inclusion(scaling_phase(2.0), identity_phase(), g, ic);
    record_inclusion(r, "example.scaling_id", w);
    expect_verdict(r, "example.scaling_id.expected", w, false);
}

void example_borchers(VerificationReport& r, const RunConfig& cfg)
{
    const GridSpec g = grid_of(cfg);
    const double c = borchers_lattice(g);
    const double f = borchers_lattice(make_grid(g.L, 2 * g.N));
    r.at_most("example.borchers.residual", c, cfg.tol.borchers);
    r.info("example.borchers.residual_fine", f);
    r.flag("example.borchers.refines", f <= 0.5 * c || (c <= cfg.tol.roundoff_floor && f <= cfg.tol.roundoff_floor),
           "halves under refinement or sits at roundoff");
}

void example_wiesbrock(VerificationReport& r, const RunConfig& cfg)
{
    const GridSpec g = grid_of(cfg);
    r.at_most("example.wiesbrock.battery", wiesbrock_battery(g, cfg.probes.count, cfg.probes.seed),
              cfg.tol.wiesbrock);
    const StandardPairModel pair(parse_phase("blaschke:-1i"), g);
    const auto ps = pair_probes(pair, 1, cfg.probes.seed);
    r.at_most("example.wiesbrock.t0", wiesbrock_cocycle_residual(pair, 0.0, ps.front()),
              cfg.tol.structural);
}

void example_orthogonality(VerificationReport& r, const RunConfig& cfg)
{
    const GridSpec g = grid_of(cfg);
    const PairOnCircle c = shared_pair("blaschke:-1i", "id", g);
    const PairOnCircle f = shared_pair("blaschke:-1i", "id", make_grid(g.L, 2 * g.N));
    const double dc = orthogonality_defect(c.p1, c.p2, {0.5, 1.0}, {2.0, 3.0}).value;
    const double df = orthogonality_defect(f.p1, f.p2, {0.5, 1.0}, {2.0, 3.0}).value;
    r.at_most("example.orthogonality.defect", dc, cfg.tol.orthogonality);
    r.info("example.orthogonality.defect_fine", df);
    r.flag("example.orthogonality.shrinks", shrinks(dc, df, cfg.tol.roundoff_floor));
    const PairOnCircle t = shared_pair("id", "id", g);
    r.at_most("example.orthogonality.same_pair",
              orthogonality_defect(t.p1, t.p2, {0.5, 1.0}, {2.0, 3.0}).value, 1e-10);
    r.at_least("example.orthogonality.overlap",
               orthogonality_defect(t.p1, t.p2, {0.5, 2.0}, {1.0, 3.0}, true).value, 0.5,
               "overlapping intervals share spectral mass");
}

void example_contraction(VerificationReport& r, const RunConfig& cfg)
{
    const GridSpec g = grid_of(cfg);
    const PairOnCircle pc = shared_pair("blaschke:-1i", "id", g);
    const auto probes = pair_probes(pc.p1, cfg.probes.count, cfg.probes.seed);
    for (double y : {0.1, 1.0, 10.0}) {
        const ContractionResult c = contraction_study(pc.p1, pc.p2, y, probes);
        std::ostringstream k;
        k << "example.contraction.y" << y;
        r.at_most(k.str() + ".ratio", c.ratio, 1.0 + cfg.tol.contraction);
        r.at_most(k.str() + ".tail", c.tail, cfg.tol.cutoff_tail);
        r.info(k.str() + ".cutoff", c.cutoff);
    }
    r.at_most("example.contraction.y0", std::abs(contraction_ratio(pc.p1, pc.p2, 0.0, 1e3, probes) - 1.0),
              cfg.tol.structural);
    const auto rev = pair_probes(pc.p2, cfg.probes.count, cfg.probes.seed);
    r.at_least("example.contraction.reversed", contraction_ratio(pc.p2, pc.p1, 5.0, 4.0, rev),
               1.0 + cfg.tol.contraction, "no contraction without inclusion");
}

void example_matrix(VerificationReport& r, const RunConfig& cfg)
{
    const GridSpec g = grid_of(cfg);
    const auto leak = [&](const char* spec) {
        return matrix_inner_test(parse_phase(spec), g, cfg.probes.count, cfg.probes.seed).leakage;
    };
    r.at_most("example.matrix.rotated_blaschke", leak("mat(blaschke:-1i,id,30)"), cfg.tol.leakage);
    r.at_most("example.matrix.constant", leak("mat(id,id,30)"), 1e-10);
    r.at_least("example.matrix.sinh", leak("mat(sinh,id,0)"), cfg.tol.leakage, "not inner");
}

} // namespace

VerificationReport cmd_example(const std::string& name, const RunConfig& cfg)
{
    validate(cfg);
    VerificationReport r;
    r.case_id = "example:" + name;
    r.config = format_config(cfg);
    const auto t0 = Clock::now();
    if (name == "blaschke-4.4")
        example_blaschke(r, cfg);
    else if (name == "sinh-4.5")
        example_sinh(r, cfg);
    else if (name == "scaling-4.3")
        example_scaling(r, cfg);
    else if (name == "borchers")
        example_borchers(r, cfg);
    else if (name == "wiesbrock")
        example_wiesbrock(r, cfg);
    else if (name == "orthogonality")
        example_orthogonality(r, cfg);
    else if (name == "contraction")
        example_contraction(r, cfg);
    else if (name == "matrix-4.6")
        example_matrix(r, cfg);
    else
        throw UsageError("unknown example '" + name + "'");
    r.timings[name] = seconds_since(t0);
    return r;
}

std::string cmd_sweep(const std::string& case_name, const std::vector<std::size_t>& Ns, const RunConfig& cfg)
{
    validate(cfg);
    std::ostringstream o;
    o.precision(17);
    if (case_name == "appendix-a") {
        // monotone: 1 while every discrepancy so far is below its predecessor
        o << "N,discrepancy,norm_defect,monotone\n";
        double prev = infinity;
        bool mono = true;
        for (const auto& row : appendix_study(cfg.appendix.s, cfg.grid.L, Ns)) {
            mono = mono && row.discrepancy < prev;
            prev = row.discrepancy;
            o << row.N << "," << row.discrepancy << "," << row.norm_defect << "," << (mono ? 1 : 0) << "\n";
        }
    } else if (case_name == "inclusion") {
        o << "N,spectral,membership,leakage\n";
        const BoundaryPhase a = parse_phase(cfg.phase1), b = parse_phase(cfg.phase2);
        for (std::size_t N : Ns) {
            const DetectorValues v = inclusion_defects(a, b, make_grid(cfg.grid.L, N), inclusion_config(cfg));
            o << N << "," << v.spectral.value << "," << v.membership << "," << v.leakage << "\n";
        }
    } else if (case_name == "borchers") {
        o << "N,residual\n";
        for (std::size_t N : Ns)
            o << N << "," << borchers_lattice(make_grid(cfg.grid.L, N)) << "\n";
    } else {
        throw UsageError("unknown sweep case '" + case_name + "' (appendix-a, inclusion, borchers)");
    }
    return o.str();
}

} // namespace modpair
