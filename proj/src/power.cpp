#include "modpair/power.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace modpair {

NormEstimate power_norm(const LinearMap& A, const GridSpec& g, const SpectralOptions& opt,
                        const LinearMap& B)
{
    if (opt.restarts == 0 || opt.max_iterations == 0)
        throw Error("power iteration needs at least one restart and one iteration");
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> nd;
    NormEstimate best;
    best.converged = true;
    for (std::size_t r = 0; r < opt.restarts; ++r) {
        WaveFunction v(g);
        for (auto& x : v.values)
            x = {nd(rng), nd(rng)};
        v = normalized(v);
        double mu = -1.0;
        bool done = false;
        std::size_t it = 0;
        while (it < opt.max_iterations) {
            ++it;
            WaveFunction w = A(v);
            const double next = std::real(inner_product(v, w));
            const double n = w.norm();
            if (n == 0.0) {
                mu = 0.0;
                done = true;
                break;
            }
            v = (1.0 / n) * w;
            if (std::sqrt(std::max(next, 0.0)) >= opt.bound - opt.saturation) {
                mu = next;
                done = true;
                break;
            }
            if (mu >= 0.0 && std::abs(next - mu) <= opt.rel_tol * std::abs(next) + opt.abs_tol) {
                mu = next;
                done = true;
                break;
            }
            mu = next;
        }
        best.iterations += it;
        best.converged = best.converged && done;
        const double value = B && mu > 0.0 ? B(v).norm() : std::sqrt(std::max(mu, 0.0));
        best.value = std::max(best.value, value);
    }
    return best;
}

double dense_norm(const LinearMap& B, const GridSpec& g)
{
    WaveFunction e(g);
    WaveFunction first = B(e);
    const auto rows = static_cast<Eigen::Index>(first.size());
    Eigen::MatrixXcd M(rows, static_cast<Eigen::Index>(g.N));
    // columns for the weighted pairing: B acting on e_j / sqrt(h), rows scaled by sqrt(h_out)
    const double win = std::sqrt(g.weight());
    for (std::size_t j = 0; j < g.N; ++j) {
        e.values.assign(g.N, 0.0);
        e[j] = 1.0 / win;
        WaveFunction c = B(e);
        const double wout = std::sqrt(c.grid.weight());
        for (Eigen::Index i = 0; i < rows; ++i)
            M(i, static_cast<Eigen::Index>(j)) = wout * c[static_cast<std::size_t>(i)];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(0);
}

} // namespace modpair
