#include "modpair/inclusion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace modpair {

namespace {

void add_zero(std::vector<ZeroFactor>& zs, cplx w, int power)
{
    for (auto& z : zs) {
        if (std::abs(z.zero - w) <= 1e-12 * std::max(1.0, std::abs(w))) {
            z.power += power;
            return;
        }
    }
    zs.push_back({w, power});
}

void drop_trivial(std::vector<ZeroFactor>& zs)
{
    zs.erase(std::remove_if(zs.begin(), zs.end(), [](const ZeroFactor& z) { return z.power == 0; }),
             zs.end());
}

Factorization negated(const Factorization& f)
{
    Factorization r;
    r.shift_t = -f.shift_t;
    r.sinh_power = -f.sinh_power;
    for (const auto& z : f.zeros)
        r.zeros.push_back({z.zero, -z.power});
    return r;
}

// Cayley warp tan on the lattice: (2/h) tan(lambda h / 2)
double warp(double l, double h)
{
    return 2.0 / h * std::tan(0.5 * l * h);
}

cplx unwarp(cplx lt, double h)
{
    return 2.0 / h * std::atan(0.5 * h * lt);
}

} // namespace

Factorization factorize(const BoundaryPhase& phi)
{
    Factorization f;
    switch (phi.kind) {
    case PhaseKind::identity:
        break;
    case PhaseKind::blaschke:
        for (const cplx& w : phi.zeros)
            add_zero(f.zeros, w, 1);
        break;
    case PhaseKind::exponential:
        // e^{-i a lambda} acts as the multiplier e^{2 pi i a lambda}, the flow at t = -a
        f.shift_t = -phi.param;
        break;
    case PhaseKind::scaling:
        f.shift_t = std::log(phi.param) / (2.0 * pi);
        break;
    case PhaseKind::sinh:
        f.sinh_power = 1;
        break;
    case PhaseKind::conjugate:
        f = negated(factorize(phi.parts.front()));
        break;
    case PhaseKind::product:
        for (const auto& p : phi.parts) {
            Factorization g = factorize(p);
            f.shift_t += g.shift_t;
            f.sinh_power += g.sinh_power;
            for (const auto& z : g.zeros)
                add_zero(f.zeros, z.zero, z.power);
        }
        break;
    case PhaseKind::matrix:
        throw Error("standard pair model supports scalar phases only");
    }
    drop_trivial(f.zeros);
    return f;
}

Factorization relative(const Factorization& a, const Factorization& b)
{
    Factorization r = a;
    const Factorization nb = negated(b);
    r.shift_t += nb.shift_t;
    r.sinh_power += nb.sinh_power;
    for (const auto& z : nb.zeros)
        add_zero(r.zeros, z.zero, z.power);
    drop_trivial(r.zeros);
    return r;
}

std::vector<Pole> multiplier_poles(const Factorization& f, const GridSpec& work, int side)
{
    std::vector<Pole> out;
    const double h = work.h();
    for (const auto& z : f.zeros) {
        // b_w(-2 pi lt) has its pole at lt = -conj(w)/2pi and its zero at lt = -w/2pi
        if (z.power > 0 && side < 0)
            out.push_back({unwarp(-std::conj(z.zero) / (2.0 * pi), h), z.power});
        if (z.power < 0 && side > 0)
            out.push_back({unwarp(-z.zero / (2.0 * pi), h), -z.power});
    }
    return out;
}

std::size_t default_pad(const BoundaryPhase& phi, const GridSpec& grid)
{
    const Factorization f = factorize(phi);
    std::size_t P = 1;
    if (f.sinh_power != 0)
        P = 8;
    if (!f.zeros.empty()) {
        double rate = infinity;
        for (const auto& z : f.zeros)
            rate = std::min(rate, std::abs(z.zero.imag()) / (2.0 * pi));
        while ((2.0 * static_cast<double>(P) - 1.0) * grid.L * rate < 70.0 && P < 64)
            P *= 2;
    }
    return P;
}

StandardPairModel::StandardPairModel(BoundaryPhase phi, const GridSpec& grid, std::size_t pad)
    : phi_(std::move(phi)), grid_(grid.in(Picture::theta))
{
    grid_.validate();
    fact_ = factorize(phi_);
    pad_ = pad == 0 ? default_pad(phi_, grid_) : pad;
    work_ = widened(grid_, pad_);
    kappa_ = std::exp(-2.0 * pi * fact_.shift_t);
    sinh_cap_ = sinh_cap_for_delay((static_cast<double>(pad_) - 1.0) * grid_.L);
    if (!fact_.trivial_rest()) {
        symbol_.resize(work_.N);
        const GridSpec lg = work_.in(Picture::lambda);
        const double h = work_.h();
        for (std::size_t k = 0; k < work_.N; ++k) {
            const double l = lg.lambda(k);
            const double x = -2.0 * pi * warp(l, h);
            cplx m = 1.0;
            for (const auto& z : fact_.zeros) {
                cplx b = std::isfinite(x) ? (x - z.zero) / (x - std::conj(z.zero)) : cplx(1.0);
                m *= std::pow(z.power > 0 ? b : std::conj(b), std::abs(z.power));
            }
            if (fact_.sinh_power != 0)
                m *= std::polar(1.0, -fact_.sinh_power * capped_sinh(pi * l, sinh_cap_));
            symbol_[k] = m;
        }
    }
}

WaveFunction StandardPairModel::lift(const WaveFunction& psi) const
{
    WaveFunction t = to_picture(psi, Picture::theta);
    if (t.grid == work_)
        return t;
    if (t.grid == grid_)
        return embed(t, work_);
    throw Error("incompatible grids");
}

WaveFunction StandardPairModel::restrict_to_grid(const WaveFunction& v) const
{
    return crop(to_picture(v, Picture::theta), grid_);
}

WaveFunction StandardPairModel::apply_rest(const WaveFunction& v, bool adjoint) const
{
    WaveFunction t = lift(v);
    if (symbol_.empty())
        return t;
    WaveFunction f = fourier(t);
    for (std::size_t k = 0; k < f.size(); ++k)
        f[k] *= adjoint ? std::conj(symbol_[k]) : symbol_[k];
    return inverse_fourier(f);
}

WaveFunction StandardPairModel::apply_U(double s, const WaveFunction& psi) const
{
    WaveFunction v = lift(psi);
    if (s == 0.0)
        return v;
    v = apply_rest(v, true);
    const double a = kappa_ * s;
    v = multiply_theta(v, [a](double th) { return std::polar(1.0, a * std::exp(th)); });
    return apply_rest(v, false);
}

WaveFunction StandardPairModel::spectral_projection(Interval iv, const WaveFunction& psi) const
{
    if (iv.a < 0.0)
        throw Error("spectral interval must satisfy a >= 0");
    if (!(iv.b > iv.a))
        throw Error("spectral interval must satisfy a < b");
    const double lk = std::log(kappa_);
    const double lo = iv.a > 0.0 ? std::log(iv.a) - lk : -infinity;
    const double hi = std::isinf(iv.b) ? infinity : std::log(iv.b) - lk;
    WaveFunction v = apply_rest(psi, true);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double th = v.grid.theta(j);
        if (!(th >= lo && th < hi))
            v[j] = 0.0;
    }
    return apply_rest(v, false);
}

WaveFunction StandardPairModel::semigroup(double y, Semigroup dir, const WaveFunction& psi,
                                          double cutoff) const
{
    if (y < 0.0)
        throw Error("semigroup parameter y must be >= 0");
    WaveFunction v = apply_rest(psi, true);
    const double k = kappa_;
    if (dir == Semigroup::decaying) {
        v = multiply_theta(v, [y, k](double th) { return cplx(std::exp(-y * k * std::exp(th))); });
    } else {
        if (!(y * cutoff <= 700.0))
            throw Error("overflow guard: y * cutoff exceeds 700; use cutoff <= "
                        + std::to_string(700.0 / y));
        v = multiply_theta(v, [y, k, cutoff](double th) {
            const double p = k * std::exp(th);
            return p < cutoff ? cplx(std::exp(y * p)) : cplx(0.0);
        });
    }
    return apply_rest(v, false);
}

WaveFunction StandardPairModel::generator(const WaveFunction& psi) const
{
    WaveFunction v = apply_rest(psi, true);
    const double k = kappa_;
    v = multiply_theta(v, [k](double th) { return cplx(k * std::exp(th)); });
    return apply_rest(v, false);
}

WaveFunction pair_apply_U(const StandardPairModel& pair, double s, const WaveFunction& psi)
{
    return pair.apply_U(s, psi);
}

WaveFunction pair_spectral_projection(const StandardPairModel& pair, Interval iv,
                                      const WaveFunction& psi)
{
    return pair.spectral_projection(iv, psi);
}

WaveFunction closed_form_H0(const GridSpec& g, double c, double s)
{
    const GridSpec lg = g.in(Picture::lambda);
    WaveFunction f(lg);
    for (std::size_t k = 0; k < lg.N; ++k) {
        const double l = lg.lambda(k);
        f[k] = s * std::exp(cplx(0.5 * pi * l - 0.5 * s * s * l * l, -l * c));
    }
    return to_picture(f, g.picture);
}

WaveFunction tail_cancelled(const std::vector<WaveFunction>& basis,
                            const std::vector<WaveFunction>& transformed,
                            const std::vector<Pole>& poles, bool real_coefficients)
{
    if (basis.empty() || basis.size() != transformed.size())
        throw Error("tail cancellation needs matching nonempty bases");
    std::size_t conds = 0;
    for (const auto& p : poles)
        conds += static_cast<std::size_t>(p.multiplicity);
    if (conds == 0)
        return basis.front();
    const std::size_t unknowns = real_coefficients ? 2 * conds : conds;
    if (basis.size() < unknowns + 1)
        throw Error("tail cancellation needs " + std::to_string(unknowns + 1) + " basis vectors");

    // row r of pole p: sum_j g_j theta_j^r e^{-i lambda_p theta_j}
    auto condition = [&](const WaveFunction& g) {
        std::vector<cplx> c;
        for (const auto& p : poles) {
            for (int r = 0; r < p.multiplicity; ++r) {
                cplx sum = 0.0;
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const double th = g.grid.theta(j);
                    sum += g[j] * std::pow(th, r) * std::exp(-I * p.lambda * th);
                }
                c.push_back(g.grid.h() * sum);
            }
        }
        return c;
    };
    const auto c0 = condition(transformed[0]);
    std::vector<std::vector<cplx>> cs;
    for (std::size_t i = 1; i <= unknowns; ++i)
        cs.push_back(condition(transformed[i]));

    std::vector<cplx> coef(unknowns);
    if (real_coefficients) {
        const auto n = static_cast<Eigen::Index>(unknowns);
        Eigen::MatrixXd A(n, n);
        Eigen::VectorXd b(n);
        for (std::size_t r = 0; r < conds; ++r) {
            const auto r0 = static_cast<Eigen::Index>(2 * r);
            for (std::size_t i = 0; i < unknowns; ++i) {
                A(r0, static_cast<Eigen::Index>(i)) = cs[i][r].real();
                A(r0 + 1, static_cast<Eigen::Index>(i)) = cs[i][r].imag();
            }
            b(r0) = -c0[r].real();
            b(r0 + 1) = -c0[r].imag();
        }
        Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
        for (std::size_t i = 0; i < unknowns; ++i)
            coef[i] = x(static_cast<Eigen::Index>(i));
    } else {
        const auto n = static_cast<Eigen::Index>(unknowns);
        Eigen::MatrixXcd A(n, n);
        Eigen::VectorXcd b(n);
        for (std::size_t r = 0; r < conds; ++r) {
            for (std::size_t i = 0; i < unknowns; ++i)
                A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = cs[i][r];
            b(static_cast<Eigen::Index>(r)) = -c0[r];
        }
        Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);
        for (std::size_t i = 0; i < unknowns; ++i)
            coef[i] = x(static_cast<Eigen::Index>(i));
    }
    WaveFunction out = basis[0];
    for (std::size_t i = 0; i < unknowns; ++i)
        out = out + coef[i] * basis[i + 1];
    return out;
}

} // namespace modpair
