#include "modpair/phases.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace modpair {

namespace {

constexpr double zero_tol = 1e-12;

bool close(cplx a, cplx b)
{
    return std::abs(a - b) <= zero_tol * std::max(1.0, std::abs(a));
}

void validate_zeros(const std::vector<cplx>& zeros)
{
    if (zeros.empty())
        throw Error("blaschke product needs at least one zero");
    for (const cplx& w : zeros)
        if (!(w.imag() < 0.0) || !std::isfinite(w.real()))
            throw Error("blaschke zero must lie in the lower half-plane");
    std::vector<bool> used(zeros.size(), false);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (used[i])
            continue;
        used[i] = true;
        if (std::abs(zeros[i].real()) <= zero_tol)
            continue;
        const cplx partner = -std::conj(zeros[i]);
        bool found = false;
        for (std::size_t j = i + 1; j < zeros.size() && !found; ++j) {
            if (!used[j] && close(zeros[j], partner)) {
                used[j] = true;
                found = true;
            }
        }
        if (!found)
            throw Error("blaschke zeros must be closed under w -> -conj(w)");
    }
}

Mat2 scalar(cplx z)
{
    return {z, 0.0, 0.0, z};
}

Mat2 mul(const Mat2& a, const Mat2& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

} // namespace

BoundaryPhase identity_phase()
{
    return {};
}

BoundaryPhase blaschke_phase(std::vector<cplx> zeros)
{
    validate_zeros(zeros);
    BoundaryPhase p;
    p.kind = PhaseKind::blaschke;
    p.zeros = std::move(zeros);
    return p;
}

BoundaryPhase exponential_phase(double a)
{
    if (!(a >= 0.0) || !std::isfinite(a))
        throw Error("exponential factor needs a >= 0");
    BoundaryPhase p;
    p.kind = PhaseKind::exponential;
    p.param = a;
    return p;
}

BoundaryPhase scaling_phase(double c)
{
    if (!(c > 0.0) || !std::isfinite(c))
        throw Error("scaling phase needs c > 0");
    BoundaryPhase p;
    p.kind = PhaseKind::scaling;
    p.param = c;
    return p;
}

BoundaryPhase sinh_phase()
{
    BoundaryPhase p;
    p.kind = PhaseKind::sinh;
    return p;
}

BoundaryPhase conjugate_phase(const BoundaryPhase& phi)
{
    if (phi.kind == PhaseKind::conjugate)
        return phi.parts.front();
    BoundaryPhase p;
    p.kind = PhaseKind::conjugate;
    p.parts = {phi};
    return p;
}

BoundaryPhase product_phase(std::vector<BoundaryPhase> factors)
{
    if (factors.empty())
        return identity_phase();
    for (const auto& f : factors)
        if (f.dimension() != 1)
            throw Error("product of matrix phases is not supported");
    BoundaryPhase p;
    p.kind = PhaseKind::product;
    p.parts = std::move(factors);
    return p;
}

BoundaryPhase matrix_phase(const BoundaryPhase& a, const BoundaryPhase& b, double degrees)
{
    if (a.dimension() != 1 || b.dimension() != 1)
        throw Error("matrix phase entries must be scalar phases");
    BoundaryPhase p;
    p.kind = PhaseKind::matrix;
    p.parts = {a, b};
    p.param = degrees;
    return p;
}

double capped_sinh(double x, double cap)
{
    if (cap >= 700.0)
        return std::sinh(std::clamp(x, -700.0, 700.0));
    if (std::abs(x) <= cap)
        return std::sinh(x);
    const double sg = x < 0.0 ? -1.0 : 1.0;
    return sg * (std::sinh(cap) + std::cosh(cap) * (std::abs(x) - cap));
}

double sinh_cap_for_delay(double d)
{
    return std::acosh(std::max(d / pi, 1.0));
}

cplx eval_phase(const BoundaryPhase& phi, double l, double cap)
{
    switch (phi.kind) {
    case PhaseKind::identity:
        return 1.0;
    case PhaseKind::blaschke: {
        cplx v = 1.0;
        for (const cplx& w : phi.zeros)
            v *= (l - w) / (l - std::conj(w));
        return v;
    }
    case PhaseKind::exponential:
        return std::polar(1.0, -phi.param * l);
    case PhaseKind::scaling:
        return std::polar(1.0, l * std::log(phi.param) / (2.0 * pi));
    case PhaseKind::sinh:
        return std::polar(1.0, capped_sinh(0.5 * l, cap));
    case PhaseKind::conjugate:
        return std::conj(eval_phase(phi.parts.front(), l, cap));
    case PhaseKind::product: {
        cplx v = 1.0;
        for (const auto& f : phi.parts)
            v *= eval_phase(f, l, cap);
        return v;
    }
    case PhaseKind::matrix:
        throw Error("eval_phase called on a matrix phase; use eval_matrix");
    }
    return 1.0;
}

cplx eval_phase_analytic(const BoundaryPhase& phi, cplx z)
{
    switch (phi.kind) {
    case PhaseKind::identity:
        return 1.0;
    case PhaseKind::blaschke: {
        cplx v = 1.0;
        for (const cplx& w : phi.zeros)
            v *= (z - w) / (z - std::conj(w));
        return v;
    }
    case PhaseKind::exponential:
        return std::exp(-I * phi.param * z);
    case PhaseKind::scaling:
        return std::exp(I * z * std::log(phi.param) / (2.0 * pi));
    case PhaseKind::sinh:
        return std::exp(I * std::sinh(0.5 * z));
    case PhaseKind::conjugate:
        return std::conj(eval_phase_analytic(phi.parts.front(), std::conj(z)));
    case PhaseKind::product: {
        cplx v = 1.0;
        for (const auto& f : phi.parts)
            v *= eval_phase_analytic(f, z);
        return v;
    }
    case PhaseKind::matrix:
        throw Error("analytic continuation is implemented for scalar phases only");
    }
    return 1.0;
}

Mat2 eval_matrix(const BoundaryPhase& phi, double l, double cap)
{
    if (phi.kind != PhaseKind::matrix)
        return scalar(eval_phase(phi, l, cap));
    const double rad = phi.param * pi / 180.0;
    const double c = std::cos(rad), s = std::sin(rad);
    const Mat2 r = {c, -s, s, c};
    const Mat2 rt = {c, s, -s, c};
    const Mat2 d = {eval_phase(phi.parts[0], l, cap), 0.0, 0.0, eval_phase(phi.parts[1], l, cap)};
    return mul(mul(r, d), rt);
}

double check_symmetric(const BoundaryPhase& phi, const GridSpec& grid)
{
    const GridSpec g = grid.in(Picture::lambda);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.N; ++k) {
        const double l = g.lambda(k);
        const Mat2 a = eval_matrix(phi, -l);
        const Mat2 b = eval_matrix(phi, l);
        for (std::size_t e = 0; e < 4; ++e)
            worst = std::max(worst, std::abs(a[e] - std::conj(b[e])));
    }
    return worst;
}

WaveFunction phase_operator(const BoundaryPhase& phi, const WaveFunction& psi)
{
    return apply_multiplier(psi, [&phi](double l) { return eval_phase(phi, -2.0 * pi * l); });
}

namespace {

// The circle is widened so that Blaschke tails and (capped) sinh delays do not wrap onto theta > 0.
std::size_t inner_pad(const BoundaryPhase& phi, const GridSpec& g)
{
    std::size_t P = 4;
    const auto grow = [&](double rate) {
        while ((2.0 * static_cast<double>(P) - 1.0) * g.L * rate < 70.0 && P < 64)
            P *= 2;
    };
    std::vector<const BoundaryPhase*> stack{&phi};
    while (!stack.empty()) {
        const BoundaryPhase* p = stack.back();
        stack.pop_back();
        if (p->kind == PhaseKind::blaschke)
            for (const cplx& w : p->zeros)
                grow(std::abs(w.imag()) / (2.0 * pi));
        if (p->kind == PhaseKind::sinh)
            P = std::max<std::size_t>(P, 8);
        for (const auto& q : p->parts)
            stack.push_back(&q);
    }
    return P;
}

double inner_cap(const GridSpec& g, std::size_t P)
{
    return sinh_cap_for_delay((static_cast<double>(P) - 1.0) * g.L);
}

struct LeftProbe {
    double c;
    double s;
};

std::vector<LeftProbe> left_probes(const GridSpec& g, std::size_t count, std::uint64_t seed)
{
    if (count == 0)
        throw Error("inner test needs a nonempty test set");
    if (g.L < 8.0)
        throw Error("grid too narrow for left-supported probes");
    // the first probe hugs theta = 0 so that small translations register
    std::vector<LeftProbe> out{{-0.8, 0.1}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (out.size() < count) {
        const double s = 0.1 + 0.9 * u(rng);
        const double hi = -8.0 * s;
        const double lo = -0.5 * g.L;
        out.push_back({lo + (hi - lo) * u(rng), s});
    }
    return out;
}

std::string describe(const std::vector<LeftProbe>& ps, std::size_t pad)
{
    std::ostringstream o;
    o << ps.size() << " gaussians, centers in [-L/2, -8 sigma], sigma in [0.1, 1], pad " << pad;
    return o.str();
}

double positive_mass(const WaveFunction& f)
{
    double in = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
        if (f.grid.theta(j) > 0.0)
            in += std::norm(f[j]);
    return in * f.grid.h();
}

} // namespace

InnerVerdict inner_test(const BoundaryPhase& phi, const GridSpec& grid, std::size_t count,
                        std::uint64_t seed, double tol)
{
    if (phi.dimension() != 1)
        return matrix_inner_test(phi, grid, count, seed, tol);
    grid.validate();
    const auto ps = left_probes(grid, count, seed);
    const std::size_t P = inner_pad(phi, grid);
    const double cap = inner_cap(grid, P);
    const GridSpec work = widened(grid.in(Picture::lambda), P);
    InnerVerdict v;
    v.tolerance = tol;
    v.probes = ps.size();
    v.test_set = describe(ps, P);
    for (const auto& p : ps) {
        WaveFunction gh = gaussian_packet(work, p.c, p.s);
        for (std::size_t k = 0; k < work.N; ++k)
            gh[k] *= eval_phase(phi, -2.0 * pi * work.lambda(k), cap);
        const WaveFunction out = inverse_fourier(gh);
        const double n2 = std::sqrt(pi) * p.s; // ||g||^2 of the unnormalized packet
        v.leakage = std::max(v.leakage, std::sqrt(positive_mass(out) / n2));
    }
    v.is_inner = v.leakage <= tol;
    return v;
}

InnerVerdict matrix_inner_test(const BoundaryPhase& V, const GridSpec& grid, std::size_t count,
                               std::uint64_t seed, double tol)
{
    grid.validate();
    const double sym = check_symmetric(V, grid);
    if (sym > 1e-10)
        throw Error("matrix phase violates the symmetry invariant");
    // two independent draws give the two components
    const auto p1 = left_probes(grid, count, seed);
    const auto p2 = left_probes(grid, count, seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t P = V.kind == PhaseKind::matrix
                              ? std::max(inner_pad(V.parts[0], grid), inner_pad(V.parts[1], grid))
                              : inner_pad(V, grid);
    const double cap = inner_cap(grid, P);
    const GridSpec work = widened(grid.in(Picture::lambda), P);
    std::vector<Mat2> sym_values(work.N);
    for (std::size_t k = 0; k < work.N; ++k)
        sym_values[k] = eval_matrix(V, -2.0 * pi * work.lambda(k), cap);
    InnerVerdict v;
    v.tolerance = tol;
    v.probes = count;
    v.test_set = describe(p1, P) + ", two components";
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    for (std::size_t i = 0; i < count; ++i) {
        const WaveFunction a = gaussian_packet(work, p1[i].c, p1[i].s);
        const WaveFunction b = std::polar(1.0, u(rng)) * gaussian_packet(work, p2[i].c, p2[i].s);
        WaveFunction oa(work), ob(work);
        for (std::size_t k = 0; k < work.N; ++k) {
            const Mat2& m = sym_values[k];
            oa[k] = m[0] * a[k] + m[1] * b[k];
            ob[k] = m[2] * a[k] + m[3] * b[k];
        }
        const double n2 = std::pow(a.norm(), 2) + std::pow(b.norm(), 2);
        const double leak = positive_mass(inverse_fourier(oa)) + positive_mass(inverse_fourier(ob));
        v.leakage = std::max(v.leakage, std::sqrt(leak / n2));
    }
    v.is_inner = v.leakage <= tol;
    return v;
}

WaveFunction blaschke_kernel_apply(const WaveFunction& psi)
{
    if (psi.grid.picture != Picture::theta)
        throw Error("blaschke_kernel_apply expects a theta-picture wave function");
    const double L = psi.grid.L;
    if (mass_fraction(psi, L - 1.0, L) > 1e-10)
        throw Error("margin violation: the kernel reads psi to the right of the grid");
    const std::size_t N = psi.size();
    const double h = psi.grid.h();
    const double q = std::exp(-h / (2.0 * pi));
    auto at = [&](std::size_t j) { return j < N ? psi[j] : cplx(0.0); };
    // S_j = sum_{m >= 0} q^m psi_{j+m}; Gregory end weights 3/8, 7/6, 23/24 at the left end
    WaveFunction out(psi.grid);
    cplx S = 0.0;
    for (std::size_t jj = N; jj-- > 0;) {
        S = psi[jj] + q * S;
        const cplx integral = h * (S - 0.625 * at(jj) + q * at(jj + 1) / 6.0
                                   - q * q * at(jj + 2) / 24.0);
        out[jj] = psi[jj] - integral / pi;
    }
    return out;
}

} // namespace modpair
