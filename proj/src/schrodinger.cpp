#include "modpair/schrodinger.hpp"

#include <cmath>

namespace modpair {

namespace {

void require_theta(const WaveFunction& psi, const char* what)
{
    if (psi.grid.picture != Picture::theta)
        throw Error(std::string(what) + " expects a theta-picture wave function");
}

// index of -lambda_k on the dual grid; k = 0 is its own partner under periodicity
std::size_t mirror(std::size_t k, std::size_t N)
{
    return (N - k) % N;
}

} // namespace

WaveFunction modular_flow(double t, const WaveFunction& psi)
{
    if (t == 0.0)
        return psi;
    if (psi.grid.picture == Picture::theta) {
        const double d = 2.0 * pi * t;
        const double L = psi.grid.L;
        double edge = d > 0 ? mass_fraction(psi, L - d, L) : mass_fraction(psi, -L, -L - d);
        if (edge > 1e-10)
            throw Error("flow translates the probe past the grid margin");
    }
    return apply_multiplier(psi, [t](double l) { return std::polar(1.0, -2.0 * pi * t * l); });
}

WaveFunction modular_conjugation(const WaveFunction& psi)
{
    WaveFunction r(psi.grid);
    const std::size_t N = psi.size();
    if (psi.grid.picture == Picture::theta) {
        for (std::size_t j = 0; j < N; ++j)
            r[j] = std::conj(psi[j]);
    } else {
        for (std::size_t k = 0; k < N; ++k)
            r[k] = std::conj(psi[mirror(k, N)]);
    }
    return r;
}

WaveFunction weyl(double s, const WaveFunction& psi)
{
    require_theta(psi, "weyl");
    if (s == 0.0)
        return psi;
    return multiply_theta(psi, [s](double th) { return std::polar(1.0, s * std::exp(th)); });
}

BorchersResidual borchers_residual(double t, double s, const WaveFunction& psi)
{
    require_theta(psi, "borchers_residual");
    BorchersResidual r;
    const WaveFunction rhs = weyl(std::exp(-2.0 * pi * t) * s, psi);
    const WaveFunction lhs = modular_flow(t, weyl(s, modular_flow(-t, psi)));
    r.flow = relative_distance(lhs, rhs);
    const WaveFunction jl = modular_conjugation(weyl(s, modular_conjugation(psi)));
    r.conjugation = relative_distance(jl, weyl(-s, psi));
    return r;
}

WaveFunction generator_apply(const WaveFunction& psi)
{
    require_theta(psi, "generator_apply");
    WaveFunction r = multiply_theta(psi, [](double th) { return cplx(std::exp(th)); });
    const double L = psi.grid.L;
    if (mass_fraction(r, L - 1.0, L) > 1e-10)
        throw Error("e^theta psi has non-negligible mass at the right edge of the grid");
    return r;
}

WaveFunction spectral_projection_base(Interval iv, const WaveFunction& psi)
{
    require_theta(psi, "spectral_projection_base");
    if (iv.a < 0.0)
        throw Error("spectral interval must satisfy a >= 0");
    if (!(iv.b > iv.a))
        throw Error("spectral interval must satisfy a < b");
    const double lo = iv.a > 0.0 ? std::log(iv.a) : -infinity;
    const double hi = std::isinf(iv.b) ? infinity : std::log(iv.b);
    WaveFunction r(psi.grid);
    for (std::size_t j = 0; j < psi.size(); ++j) {
        double th = psi.grid.theta(j);
        if (th >= lo && th < hi)
            r[j] = psi[j];
    }
    return r;
}

WaveFunction semigroup_apply(double y, Semigroup dir, const WaveFunction& psi, double cutoff)
{
    require_theta(psi, "semigroup_apply");
    if (y < 0.0)
        throw Error("semigroup parameter y must be >= 0");
    if (dir == Semigroup::decaying)
        return multiply_theta(psi, [y](double th) { return cplx(std::exp(-y * std::exp(th))); });
    if (!(y * cutoff <= 700.0))
        throw Error("overflow guard: y * cutoff exceeds 700; use cutoff <= "
                    + std::to_string(700.0 / y));
    // cut before exponentiating so 0 * inf never occurs
    return multiply_theta(psi, [y, cutoff](double th) {
        const double p = std::exp(th);
        return p < cutoff ? cplx(std::exp(y * p)) : cplx(0.0);
    });
}

MembershipVerdict membership_H0(const WaveFunction& psi, double tol, const MembershipOptions& opt)
{
    const WaveFunction ph = to_picture(psi, Picture::lambda);
    MembershipVerdict v;
    v.tolerance = tol;
    v.band_leak = band_leak(ph, opt.band);
    if (v.band_leak > opt.leak_limit)
        throw Error("membership test: Fourier mass outside |lambda| <= " + std::to_string(opt.band)
                    + " is " + std::to_string(v.band_leak));
    const std::size_t N = ph.size();
    double res = 0.0, weighted = 0.0, tot = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        tot += std::norm(ph[k]);
        const double l = ph.grid.lambda(k);
        if (k == 0 || std::abs(l) > opt.band)
            continue;
        res += std::norm(std::exp(-pi * l) * ph[k] - std::conj(ph[mirror(k, N)]));
        weighted += std::exp(-2.0 * pi * l) * std::norm(ph[k]);
    }
    if (tot == 0.0)
        throw Error("membership test of the zero vector");
    v.reflection_residual = std::sqrt(res / tot);
    v.domain_weight = weighted / tot;
    v.passes = v.reflection_residual <= tol && v.domain_weight <= opt.domain_bound;
    return v;
}

WaveFunction sample_H0_element(const WaveFunction& seed, double band)
{
    const WaveFunction ph = to_picture(seed, Picture::lambda);
    if (band_leak(ph, band) > 1e-12)
        throw Error("seed is not band-limited to |lambda| <= " + std::to_string(band));
    const std::size_t N = ph.size();
    WaveFunction r(ph.grid);
    for (std::size_t k = 1; k < N; ++k) {
        const double l = ph.grid.lambda(k);
        if (std::abs(l) > band)
            continue;
        r[k] = 0.5 * (ph[k] + std::exp(pi * l) * std::conj(ph[mirror(k, N)]));
    }
    return r;
}

} // namespace modpair
