#include "modpair/power.hpp"
#include "modpair/schrodinger.hpp"

#include <doctest.h>

#include <cmath>

using namespace modpair;

TEST_SUITE("power")
{
    TEST_CASE("norm of a theta multiplier is its sup over the grid")
    {
        const GridSpec g = make_grid(10.0, 128);
        const auto m = [](double th) { return cplx(1.0 / (1.0 + (th - 1.3) * (th - 1.3))); };
        const LinearMap B = [&](const WaveFunction& v) { return multiply_theta(v, m); };
        const LinearMap A = [&](const WaveFunction& v) { return B(B(v)); };
        double sup = 0.0;
        for (std::size_t j = 0; j < g.N; ++j)
            sup = std::max(sup, std::abs(m(g.theta(j))));
        CHECK(dense_norm(B, g) == doctest::Approx(sup).epsilon(1e-12));
        SpectralOptions o;
        o.max_iterations = 4000;
        const NormEstimate e = power_norm(A, g, o, B);
        CHECK(e.converged);
        CHECK(e.value == doctest::Approx(sup).epsilon(1e-6));
    }

    TEST_CASE("power iteration agrees with the dense norm of a projection product")
    {
        const GridSpec g = make_grid(8.0, 128);
        const LinearMap B = [](const WaveFunction& v) {
            return spectral_projection_base({1.0, infinity}, modular_flow(0.05, spectral_projection_base({0.0, 1.0}, v)));
        };
        const LinearMap A = [&](const WaveFunction& v) {
            const WaveFunction w = B(v);
            return spectral_projection_base({0.0, 1.0}, modular_flow(-0.05, spectral_projection_base({1.0, infinity}, w)));
        };
        SpectralOptions o;
        o.max_iterations = 4000;
        const double d = dense_norm(B, g);
        const NormEstimate e = power_norm(A, g, o, B);
        CHECK(d > 0.05);
        CHECK(std::abs(e.value - d) <= 1e-6);
    }

    TEST_CASE("the zero map has norm zero")
    {
        const GridSpec g = make_grid(8.0, 64);
        const LinearMap Z = [](const WaveFunction& v) { return WaveFunction(v.grid); };
        CHECK(power_norm(Z, g).value == 0.0);
        CHECK(dense_norm(Z, g) == 0.0);
    }

    TEST_CASE("saturation stops early at the a priori bound")
    {
        const GridSpec g = make_grid(8.0, 256);
        const LinearMap P = [](const WaveFunction& v) { return spectral_projection_base({0.5, 2.0}, v); };
        SpectralOptions o;
        o.bound = 1.0;
        const NormEstimate e = power_norm(P, g, o, P);
        CHECK(e.value == doctest::Approx(1.0));
        CHECK(e.iterations < 10);
    }

    TEST_CASE("estimates are reproducible for a fixed seed")
    {
        const GridSpec g = make_grid(8.0, 128);
        const LinearMap A = [](const WaveFunction& v) {
            return multiply_theta(v, [](double th) { return cplx(std::exp(-th * th)); });
        };
        CHECK(power_norm(A, g).value == power_norm(A, g).value);
    }
}
