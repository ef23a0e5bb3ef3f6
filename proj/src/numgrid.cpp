#include "modpair/numgrid.hpp"

#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace modpair {

void GridSpec::validate() const
{
    if (!(L > 0.0) || !std::isfinite(L))
        throw Error("grid: L must be positive");
    if (N < 16 || N % 2 != 0)
        throw Error("grid: N must be even and at least 16");
}

GridSpec make_grid(double L, std::size_t N, Picture p)
{
    GridSpec g{L, N, p};
    g.validate();
    return g;
}

WaveFunction::WaveFunction(const GridSpec& g, cvec v) : grid(g), values(std::move(v))
{
    if (values.size() != grid.N)
        throw Error("wave function length does not match grid");
}

double WaveFunction::norm() const
{
    double s = 0.0;
    for (const auto& v : values)
        s += std::norm(v);
    return std::sqrt(grid.weight() * s);
}

static void require_same(const WaveFunction& f, const WaveFunction& g)
{
    if (!(f.grid == g.grid))
        throw Error("incompatible grids");
}

cplx inner_product(const WaveFunction& f, const WaveFunction& g)
{
    require_same(f, g);
    cplx s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
        s += std::conj(f[j]) * g[j];
    return f.grid.weight() * s;
}

double distance(const WaveFunction& f, const WaveFunction& g)
{
    return (f - g).norm();
}

double relative_distance(const WaveFunction& f, const WaveFunction& g)
{
    double d = distance(f, g);
    double n = g.norm();
    return n > 0.0 ? d / n : d;
}

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b)
{
    require_same(a, b);
    WaveFunction r(a.grid);
    for (std::size_t j = 0; j < a.size(); ++j)
        r[j] = a[j] + b[j];
    return r;
}

WaveFunction operator-(const WaveFunction& a, const WaveFunction& b)
{
    require_same(a, b);
    WaveFunction r(a.grid);
    for (std::size_t j = 0; j < a.size(); ++j)
        r[j] = a[j] - b[j];
    return r;
}

WaveFunction operator*(cplx c, const WaveFunction& a)
{
    WaveFunction r(a.grid);
    for (std::size_t j = 0; j < a.size(); ++j)
        r[j] = c * a[j];
    return r;
}

WaveFunction normalized(const WaveFunction& f)
{
    double n = f.norm();
    if (n == 0.0)
        throw Error("cannot normalize the zero vector");
    return (1.0 / n) * f;
}

// With theta_0 = -L and lambda_0 = -(N/2) dlambda, e^{-i lambda_k theta_j} factors into
// (-1)^{k-N/2} (-1)^j e^{-2 pi i k j / N}; the offsets reduce to signs.
WaveFunction fourier(const WaveFunction& f)
{
    if (f.grid.picture != Picture::theta)
        throw Error("fourier expects a theta-picture wave function");
    const std::size_t N = f.grid.N;
    cvec x = f.values;
    for (std::size_t j = 1; j < N; j += 2)
        x[j] = -x[j];
    detail::dft(x, -1);
    const double c = f.grid.h() / std::sqrt(2.0 * pi);
    const double s0 = (N / 2) % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t k = 0; k < N; ++k)
        x[k] *= (k % 2 == 0 ? s0 : -s0) * c;
    return WaveFunction(f.grid.in(Picture::lambda), std::move(x));
}

WaveFunction inverse_fourier(const WaveFunction& f)
{
    if (f.grid.picture != Picture::lambda)
        throw Error("inverse_fourier expects a lambda-picture wave function");
    const std::size_t N = f.grid.N;
    cvec x = f.values;
    const double s0 = (N / 2) % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t k = 0; k < N; ++k)
        x[k] *= (k % 2 == 0 ? s0 : -s0);
    detail::dft(x, +1);
    const double c = f.grid.dual_spacing() / std::sqrt(2.0 * pi);
    for (std::size_t j = 0; j < N; ++j)
        x[j] *= (j % 2 == 0 ? c : -c);
    return WaveFunction(f.grid.in(Picture::theta), std::move(x));
}

WaveFunction to_picture(const WaveFunction& f, Picture p)
{
    if (f.grid.picture == p)
        return f;
    return p == Picture::lambda ? fourier(f) : inverse_fourier(f);
}

WaveFunction apply_multiplier(const WaveFunction& f, const std::function<cplx(double)>& symbol)
{
    WaveFunction fh = to_picture(f, Picture::lambda);
    for (std::size_t k = 0; k < fh.size(); ++k)
        fh[k] *= symbol(fh.grid.lambda(k));
    return to_picture(fh, f.grid.picture);
}

GridSpec widened(const GridSpec& g, std::size_t P)
{
    if (P < 1)
        throw Error("widening factor must be at least 1");
    return {g.L * static_cast<double>(P), g.N * P, g.picture};
}

static std::size_t offset_of(const GridSpec& small, const GridSpec& big)
{
    if (big.N < small.N || (big.N - small.N) % 2 != 0
        || std::abs(big.h() - small.h()) > 1e-12 * small.h())
        throw Error("incompatible grids");
    return (big.N - small.N) / 2;
}

WaveFunction embed(const WaveFunction& f, const GridSpec& big)
{
    if (f.grid.picture != Picture::theta)
        throw Error("embed expects a theta-picture wave function");
    GridSpec b = big.in(Picture::theta);
    std::size_t off = offset_of(f.grid, b);
    WaveFunction r(b);
    std::copy(f.values.begin(), f.values.end(), r.values.begin() + static_cast<long>(off));
    return r;
}

WaveFunction crop(const WaveFunction& f, const GridSpec& small)
{
    if (f.grid.picture != Picture::theta)
        throw Error("crop expects a theta-picture wave function");
    GridSpec s = small.in(Picture::theta);
    std::size_t off = offset_of(s, f.grid);
    WaveFunction r(s);
    std::copy_n(f.values.begin() + static_cast<long>(off), s.N, r.values.begin());
    return r;
}

WaveFunction multiply_theta(const WaveFunction& f, const std::function<cplx(double)>& m)
{
    if (f.grid.picture != Picture::theta)
        throw Error("theta-picture wave function required");
    WaveFunction r(f.grid);
    for (std::size_t j = 0; j < f.size(); ++j)
        r[j] = m(f.grid.theta(j)) * f[j];
    return r;
}

double mass_fraction(const WaveFunction& f, double a, double b)
{
    double in = 0.0, tot = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        double w = std::norm(f[j]);
        tot += w;
        double x = f.grid.point(j);
        if (x >= a && x < b)
            in += w;
    }
    return tot > 0.0 ? std::sqrt(in / tot) : 0.0;
}

double band_leak(const WaveFunction& fhat, double band)
{
    double out = 0.0, tot = 0.0;
    for (std::size_t k = 0; k < fhat.size(); ++k) {
        double w = std::norm(fhat[k]);
        tot += w;
        if (std::abs(fhat.grid.lambda(k)) > band)
            out += w;
    }
    return tot > 0.0 ? std::sqrt(out / tot) : 0.0;
}

WaveFunction gaussian_packet(const GridSpec& g, double c, double s, double kappa)
{
    WaveFunction r(g);
    for (std::size_t i = 0; i < g.N; ++i) {
        double x = g.point(i);
        if (g.picture == Picture::theta) {
            double u = (x - c) / s;
            r[i] = std::exp(cplx(-0.5 * u * u, kappa * x));
        } else {
            double q = x - kappa;
            r[i] = s * std::exp(cplx(-0.5 * s * s * q * q, -q * c));
        }
    }
    return r;
}

namespace {

// Hermite function h_n(x) up to normalization, stable three-term recurrence.
double hermite_function(int n, double x)
{
    double h0 = std::exp(-0.5 * x * x);
    if (n == 0)
        return h0;
    double h1 = std::sqrt(2.0) * x * h0;
    for (int k = 1; k < n; ++k) {
        double h2 = std::sqrt(2.0 / (k + 1)) * x * h1 - std::sqrt(static_cast<double>(k) / (k + 1)) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

} // namespace

std::vector<WaveFunction> probe_family(const GridSpec& g, ProbeKind kind, const ProbeParams& p,
                                       std::size_t count, std::uint64_t seed)
{
    g.validate();
    GridSpec target = g.in(p.picture);
    std::mt19937_64 rng(seed);
    auto uni = [&](double a, double b) {
        return a == b ? a : std::uniform_real_distribution<double>(a, b)(rng);
    };
    const double cmax = std::max(std::abs(p.center_lo), std::abs(p.center_hi));
    const double nyquist = pi / g.h();
    std::vector<WaveFunction> out;
    out.reserve(count);

    switch (kind) {
    case ProbeKind::gaussian_bump: {
        if (cmax + 5.0 * p.width_hi > g.L || p.momentum_max + 5.0 / p.width_lo > nyquist)
            throw Error("probe escapes grid");
        for (std::size_t i = 0; i < count; ++i) {
            double c = uni(p.center_lo, p.center_hi);
            double s = uni(p.width_lo, p.width_hi);
            double k = uni(-p.momentum_max, p.momentum_max);
            out.push_back(normalized(gaussian_packet(target, c, s, k)));
        }
        break;
    }
    case ProbeKind::band_limited_random: {
        const double lam = p.lambda_max;
        const double tau = lam / 16.0;
        if (lam > nyquist || cmax + 5.0 / tau > g.L)
            throw Error("probe escapes grid");
        GridSpec lg = g.in(Picture::lambda);
        std::normal_distribution<double> nd;
        for (std::size_t i = 0; i < count; ++i) {
            WaveFunction f(lg);
            for (int m = 0; m < 4; ++m) {
                double mu = uni(-0.5 * lam, 0.5 * lam);
                double x = uni(p.center_lo, p.center_hi);
                cplx a(nd(rng), nd(rng));
                for (std::size_t k = 0; k < lg.N; ++k) {
                    double l = lg.lambda(k);
                    if (std::abs(l) > lam)
                        continue;
                    double q = (l - mu) / tau;
                    f[k] += a * std::exp(cplx(-0.5 * q * q, -l * x));
                }
            }
            out.push_back(to_picture(normalized(f), p.picture));
        }
        break;
    }
    case ProbeKind::hermite_like: {
        const int nmax = std::max(p.hermite_max, 0);
        if (cmax + (5.0 + std::sqrt(2.0 * nmax + 1.0)) * p.width_hi > g.L
            || (5.0 + std::sqrt(2.0 * nmax + 1.0)) / p.width_lo > nyquist)
            throw Error("probe escapes grid");
        for (std::size_t i = 0; i < count; ++i) {
            int n = static_cast<int>(i % static_cast<std::size_t>(nmax + 1));
            double c = uni(p.center_lo, p.center_hi);
            double s = uni(p.width_lo, p.width_hi);
            WaveFunction f(target);
            // the transform of h_n is (-i)^n h_n
            cplx phase = std::pow(cplx(0.0, -1.0), n);
            for (std::size_t k = 0; k < target.N; ++k) {
                double x = target.point(k);
                if (p.picture == Picture::theta)
                    f[k] = hermite_function(n, (x - c) / s);
                else
                    f[k] = phase * s * std::exp(cplx(0.0, -x * c)) * hermite_function(n, s * x);
            }
            out.push_back(normalized(f));
        }
        break;
    }
    }
    return out;
}

ProbeKind parse_probe_kind(const std::string& s)
{
    if (s == "gaussian-bump")
        return ProbeKind::gaussian_bump;
    if (s == "band-limited-random")
        return ProbeKind::band_limited_random;
    if (s == "hermite-like")
        return ProbeKind::hermite_like;
    throw Error("unknown probe kind '" + s + "'");
}

} // namespace modpair
