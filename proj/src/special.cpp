#include "modpair/special.hpp"

#include "fft.hpp"

#include <array>
#include <cmath>

namespace modpair {

namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(cplx z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// log sin(pi z) without overflow far from the real axis
cplx log_sin_pi(cplx z)
{
    const cplx w = pi * z;
    if (w.imag() > 20.0)
        return std::log(cplx(0.0, 0.5)) - I * w + std::log(1.0 - std::exp(2.0 * I * w));
    if (w.imag() < -20.0)
        return std::log(cplx(0.0, -0.5)) + I * w + std::log(1.0 - std::exp(-2.0 * I * w));
    return std::log(std::sin(w));
}

cplx lgamma_right(cplx z)
{
    // Gamma(z) = Gamma(x + 1) with x = z - 1
    const cplx x = z - 1.0;
    cplx a = lanczos_p[0];
    for (std::size_t i = 1; i < lanczos_p.size(); ++i)
        a += lanczos_p[i] / (x + static_cast<double>(i));
    const cplx t = x + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

} // namespace

cplx complex_lgamma(cplx z)
{
    if (is_pole(z))
        throw Error("gamma pole at non-positive integer");
    if (z.real() < 0.5)
        return std::log(pi) - log_sin_pi(z) - lgamma_right(1.0 - z);
    return lgamma_right(z);
}

cplx complex_gamma(cplx z)
{
    if (is_pole(z))
        throw Error("gamma pole at non-positive integer");
    if (z.real() < 0.5)
        return pi / (std::sin(pi * z) * std::exp(lgamma_right(1.0 - z)));
    return std::exp(lgamma_right(z));
}

cplx log_minus_is(double s)
{
    if (s == 0.0)
        throw Error("s must be nonzero");
    return {std::log(std::abs(s)), s > 0 ? -pi / 2 : pi / 2};
}

cplx ts_regular_origin(double s)
{
    return -euler_gamma - log_minus_is(s);
}

TsKernel build_ts_kernel(double s, const GridSpec& grid, double taper)
{
    if (s == 0.0)
        throw Error("s must be nonzero");
    grid.validate();
    if (taper < 0.0 || taper >= 1.0)
        throw Error("kernel taper must lie in [0, 1)");
    TsKernel k;
    k.s = s;
    k.grid = grid.in(Picture::lambda);
    k.taper = taper;
    const long half = static_cast<long>(grid.N / 2);
    const double dl = grid.dual_spacing();
    const double numax = static_cast<double>(half) * dl;
    const cplx lnis = log_minus_is(s);
    k.samples.assign(static_cast<std::size_t>(2 * half + 1), 0.0);
    for (long m = -half; m <= half; ++m) {
        if (m == 0)
            continue;
        const double nu = static_cast<double>(m) * dl;
        // e^{i nu ln(-is)} Gamma(-i nu) / 2 pi, assembled in log form
        cplx v = std::exp(I * nu * lnis + complex_lgamma(cplx(0.0, -nu))) / (2.0 * pi);
        const double a = std::abs(nu) / numax;
        if (taper > 0.0 && a > 1.0 - taper) {
            const double c = std::cos(0.5 * pi * (a - (1.0 - taper)) / taper);
            v *= c * c;
        }
        k.samples[static_cast<std::size_t>(m + half)] = v;
    }
    k.origin_correction = ts_regular_origin(s) / (2.0 * pi);
    return k;
}

WaveFunction apply_ts(const TsKernel& kernel, const WaveFunction& psihat)
{
    if (psihat.grid.picture != Picture::lambda)
        throw Error("apply_ts expects a lambda-picture wave function");
    if (!psihat.grid.same_lattice(kernel.grid))
        throw Error("incompatible grids");
    const std::size_t N = psihat.size();
    double peak = 0.0, edge = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        peak = std::max(peak, std::abs(psihat[k]));
        if (k < 10 || k >= N - 10)
            edge = std::max(edge, std::abs(psihat[k]));
    }
    if (edge > 1e-10 * peak)
        throw Error("margin violation: lambda-picture input must vanish on the outer 10 sites");

    // linear convolution through a 2N cyclic one
    const std::size_t M = 2 * N;
    cvec a(M, 0.0), b(M, 0.0);
    std::copy(psihat.values.begin(), psihat.values.end(), a.begin());
    const long half = static_cast<long>(N / 2);
    for (long m = -half; m <= half; ++m) {
        if (m == 0)
            continue;
        b[static_cast<std::size_t>((m + static_cast<long>(M)) % static_cast<long>(M))] = kernel.at(m);
    }
    detail::dft(a, -1);
    detail::dft(b, -1);
    for (std::size_t i = 0; i < M; ++i)
        a[i] *= b[i];
    detail::dft(a, +1);

    // The symmetric sum over nu != 0 is the trapezoid rule for the even integrand
    // (f(l - nu) - f(l + nu)) / nu without its nu = 0 node, -2 f'(l); restore that node.
    WaveFunction x = inverse_fourier(psihat);
    for (std::size_t j = 0; j < N; ++j)
        x[j] *= -I * x.grid.theta(j);
    const WaveFunction dpsi = fourier(x);

    const double dl = psihat.grid.dual_spacing();
    WaveFunction out(psihat.grid);
    for (std::size_t k = 0; k < N; ++k) {
        out[k] = kernel.delta_weight * psihat[k] + dl * a[k] / static_cast<double>(M)
                 + dl * kernel.origin_correction * psihat[k]
                 - dl * (I / (2.0 * pi)) * dpsi[k];
    }
    return out;
}

} // namespace modpair
