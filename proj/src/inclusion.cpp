#include "modpair/inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

namespace modpair {

namespace {

void require_shared_work(const StandardPairModel& a, const StandardPairModel& b)
{
    if (!(a.grid() == b.grid()) || !(a.work() == b.work()))
        throw Error("pairs must share a grid and a work grid");
}

constexpr double sample_width = 1.5;

} // namespace

NormEstimate spectral_inclusion_defect(const StandardPairModel& p1, const StandardPairModel& p2,
                                       const SpectralOptions& opt)
{
    require_shared_work(p1, p2);
    const Interval unit{0.0, 1.0};
    SpectralOptions o = opt;
    o.bound = std::min(o.bound, 1.0);
    LinearMap A = [&](const WaveFunction& v) {
        WaveFunction u = p1.spectral_projection(unit, v);
        WaveFunction w = u - p2.spectral_projection(unit, u);
        return p1.restrict_to_grid(p1.spectral_projection(unit, w));
    };
    LinearMap B = [&](const WaveFunction& v) {
        WaveFunction u = p1.spectral_projection(unit, v);
        return u - p2.spectral_projection(unit, u);
    };
    return power_norm(A, p1.grid(), o, B);
}

double membership_inclusion_defect(const StandardPairModel& p1, const StandardPairModel& p2,
                                   std::size_t samples, std::uint64_t seed,
                                   const MembershipOptions& mopt)
{
    require_shared_work(p1, p2);
    if (samples == 0)
        throw Error("membership defect needs at least one sample");
    const GridSpec& work = p1.work();
    const Factorization rel = relative(p1.factors(), p2.factors());
    const auto poles = multiplier_poles(rel, work, -1);
    std::size_t conds = 0;
    for (const auto& p : poles)
        conds += static_cast<std::size_t>(p.multiplicity);
    const std::size_t nb = 2 * conds + 1;
    MembershipOptions opt = mopt;
    opt.leak_limit = infinity;
    const double k1 = p1.kappa();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    double worst = 0.0;
    for (std::size_t n = 0; n < samples; ++n) {
        std::vector<WaveFunction> basis, moved;
        for (std::size_t j = 0; j < nb; ++j) {
            const double c = -8.0 - 4.0 * static_cast<double>(j) / static_cast<double>(std::max<std::size_t>(nb - 1, 1))
                             + jitter(rng);
            WaveFunction b = closed_form_H0(work, c, sample_width);
            moved.push_back(multiply_theta(b, [k1](double th) { return std::polar(1.0, k1 * std::exp(th)); }));
            basis.push_back(std::move(b));
        }
        WaveFunction h = normalized(tail_cancelled(basis, moved, poles, true));
        const WaveFunction sample = p1.apply_rest(h, false);
        const WaveFunction x = p2.apply_U(-1.0, p1.apply_U(1.0, sample));
        const MembershipVerdict v = membership_H0(x, 0.0, opt);
        worst = std::max(worst, v.reflection_residual);
    }
    return worst;
}

BoundaryPhase relative_phase(const StandardPairModel& p1, const StandardPairModel& p2)
{
    const BoundaryPhase& a = p1.phase();
    const BoundaryPhase& b = p2.phase();
    if (format_phase(a) == format_phase(b))
        return identity_phase();
    if (b.kind == PhaseKind::identity)
        return a;
    if (a.kind == PhaseKind::identity)
        return conjugate_phase(b);
    return product_phase({a, conjugate_phase(b)});
}

const char* to_string(Answer a)
{
    switch (a) {
    case Answer::yes:
        return "true";
    case Answer::no:
        return "false";
    case Answer::indeterminate:
        return "indeterminate";
    }
    return "indeterminate";
}

Answer trend_verdict(double coarse, double fine, double tol)
{
    if (coarse <= tol && (fine < coarse || fine <= 1e-3 * tol))
        return Answer::yes;
    if (coarse > 10.0 * tol && fine > 10.0 * tol) {
        const double r = fine / coarse;
        if (r >= 0.5 && r <= 2.0)
            return Answer::no;
    }
    return Answer::indeterminate;
}

DetectorValues inclusion_defects(const BoundaryPhase& phi1, const BoundaryPhase& phi2,
                                 const GridSpec& grid, const InclusionConfig& cfg)
{
    const std::size_t pad = std::max(default_pad(phi1, grid), default_pad(phi2, grid));
    const StandardPairModel p1(phi1, grid, pad), p2(phi2, grid, pad);
    DetectorValues r;
    r.spectral = spectral_inclusion_defect(p1, p2, cfg.spectral);
    r.membership = membership_inclusion_defect(p1, p2, cfg.samples, cfg.seed);
    r.leakage = inner_test(relative_phase(p1, p2), grid, cfg.inner_probes, cfg.seed,
                           cfg.tol.leakage).leakage;
    return r;
}

InclusionVerdict check_inclusion(const BoundaryPhase& phi1, const BoundaryPhase& phi2,
                                 const GridSpec& grid, const InclusionConfig& cfg)
{
    const GridSpec fine = make_grid(grid.L, 2 * grid.N);
    auto coarse_run = std::async(std::launch::async, inclusion_defects, std::cref(phi1),
                                 std::cref(phi2), grid.in(Picture::theta), std::cref(cfg));
    const DetectorValues f = inclusion_defects(phi1, phi2, fine, cfg);
    const DetectorValues c = coarse_run.get();

    InclusionVerdict v;
    v.spectral_defect = c.spectral.value;
    v.spectral_defect_fine = f.spectral.value;
    v.spectral_converged = c.spectral.converged && f.spectral.converged;
    v.membership_defect = c.membership;
    v.membership_defect_fine = f.membership;
    v.relative_phase_leakage = c.leakage;
    v.relative_phase_leakage_fine = f.leakage;
    v.spectral = trend_verdict(v.spectral_defect, v.spectral_defect_fine, cfg.tol.spectral);
    v.membership = trend_verdict(v.membership_defect, v.membership_defect_fine, cfg.tol.membership);
    v.inner = trend_verdict(v.relative_phase_leakage, v.relative_phase_leakage_fine, cfg.tol.leakage);
    v.agreement = v.spectral != Answer::indeterminate && v.spectral == v.membership
                  && v.membership == v.inner;
    v.verdict = v.agreement ? v.spectral : Answer::indeterminate;
    return v;
}

NormEstimate orthogonality_defect(const StandardPairModel& p1, const StandardPairModel& p2,
                                  Interval i1, Interval i2, bool allow_overlap,
                                  const SpectralOptions& opt)
{
    require_shared_work(p1, p2);
    if (!allow_overlap && !(0.0 < i1.a && i1.a <= i1.b && i1.b <= i2.a && i2.a <= i2.b))
        throw Error("orthogonality needs 0 < a1 <= b1 <= a2 <= b2");
    SpectralOptions o = opt;
    o.bound = std::min(o.bound, 1.0);
    LinearMap A = [&](const WaveFunction& v) {
        WaveFunction u = p1.spectral_projection(i1, v);
        u = p2.spectral_projection(i2, u);
        return p1.restrict_to_grid(p1.spectral_projection(i1, u));
    };
    LinearMap B = [&](const WaveFunction& v) {
        return p2.spectral_projection(i2, p1.spectral_projection(i1, v));
    };
    return power_norm(A, p1.grid(), o, B);
}

double contraction_ratio(const StandardPairModel& p1, const StandardPairModel& p2, double y,
                         double cutoff, const std::vector<WaveFunction>& probes)
{
    require_shared_work(p1, p2);
    if (!(y * cutoff <= 700.0))
        throw Error("overflow guard: y * cutoff exceeds 700; use cutoff <= "
                    + std::to_string(700.0 / y));
    double worst = 0.0;
    for (const auto& psi : probes) {
        const WaveFunction q = p2.spectral_projection({0.0, cutoff}, psi);
        const double n = q.norm();
        if (n == 0.0)
            continue;
        const WaveFunction out =
            p2.semigroup(y, Semigroup::growing, p1.semigroup(y, Semigroup::decaying, q, cutoff), cutoff);
        worst = std::max(worst, out.norm() / n);
    }
    return worst;
}

cplx AnalyticProbe::transform(cplx z) const
{
    cplx p = 1.0;
    for (const cplx& r : roots)
        p *= z - r;
    const cplx d = z - k;
    return p * s * std::exp(-0.5 * s * s * d * d - I * z * c);
}

std::vector<cplx> form_domain_roots(const BoundaryPhase& phi)
{
    // conj(phi)(-2 pi z) has a pole at z = -w/2pi for every zero w of phi
    std::vector<cplx> out;
    for (const auto& z : factorize(phi).zeros) {
        const cplx r = -z.zero / (2.0 * pi);
        if (z.power > 0 && r.imag() <= 0.5)
            for (int m = 0; m < z.power; ++m)
                out.push_back(r);
    }
    return out;
}

double generator_form(const StandardPairModel& p, const AnalyticProbe& probe)
{
    // every required root must be present in the probe, with multiplicity
    std::vector<bool> used(probe.roots.size(), false);
    for (const cplx& r : form_domain_roots(p.phase())) {
        bool found = false;
        for (std::size_t i = 0; i < probe.roots.size() && !found; ++i) {
            if (!used[i] && std::abs(probe.roots[i] - r) <= 1e-9) {
                used[i] = true;
                found = true;
            }
        }
        if (!found)
            throw Error("probe outside the form domain: transform must vanish at the pole of the pair");
    }
    const BoundaryPhase cphi = conjugate_phase(p.phase());
    const GridSpec g = p.grid().in(Picture::lambda);
    double form = 0.0, norm = 0.0, edge = 0.0, peak = 0.0;
    for (std::size_t k = 0; k < g.N; ++k) {
        const double l = g.lambda(k);
        const cplx z(l, 0.5);
        const double f = std::norm(eval_phase_analytic(cphi, -2.0 * pi * z) * probe.transform(z));
        if (!std::isfinite(f))
            throw Error("probe outside the form domain: strip integrand overflows");
        form += f;
        norm += std::norm(probe.transform(l));
        peak = std::max(peak, f);
        if (k < 4 || k + 4 >= g.N)
            edge = std::max(edge, f);
    }
    if (edge > 1e-14 * peak)
        throw Error("probe outside the form domain: strip integrand does not decay on the grid");
    return form / norm;
}

double generator_form_gap(const StandardPairModel& p1, const StandardPairModel& p2,
                          const AnalyticProbe& probe)
{
    return generator_form(p1, probe) - generator_form(p2, probe);
}

double wiesbrock_cocycle_residual(const StandardPairModel& pair, double t, const WaveFunction& psi)
{
    // the flow commutes with Mt, so both sides are evaluated on Mt* psi, where U is U0(kappa s)
    const WaveFunction g = pair.apply_rest(pair.lift(psi), true);
    const double k = pair.kappa();
    const WaveFunction lhs = weyl(k, modular_flow(t, weyl(-k, modular_flow(-t, g))));
    const WaveFunction rhs = weyl(k * (1.0 - std::exp(-2.0 * pi * t)), g);
    return relative_distance(lhs, rhs);
}

std::vector<WaveFunction> pair_probes(const StandardPairModel& pair, std::size_t count,
                                      std::uint64_t seed)
{
    const GridSpec& work = pair.work();
    Factorization blaschke = pair.factors();
    blaschke.sinh_power = 0;
    blaschke.shift_t = 0.0;
    Factorization adjoint = blaschke;
    for (auto& z : adjoint.zeros)
        z.power = -z.power;
    const auto poles = multiplier_poles(adjoint, work, +1);
    std::size_t conds = 0;
    for (const auto& p : poles)
        conds += static_cast<std::size_t>(p.multiplicity);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uc(-6.0, -3.0), us(0.5, 1.0);
    std::vector<WaveFunction> out;
    for (std::size_t n = 0; n < count; ++n) {
        const double c = uc(rng), s = us(rng);
        std::vector<WaveFunction> basis;
        for (std::size_t j = 0; j <= conds; ++j)
            basis.push_back(gaussian_packet(work, c - static_cast<double>(j), s));
        WaveFunction g = tail_cancelled(basis, basis, poles, false);
        if (pair.factors().sinh_power != 0) {
            const int p = pair.factors().sinh_power;
            const double cap = pair.sinh_cap();
            g = apply_multiplier(g, [p, cap](double l) {
                return std::polar(1.0, -p * capped_sinh(pi * l, cap));
            });
        }
        out.push_back(normalized(g));
    }
    return out;
}

} // namespace modpair
