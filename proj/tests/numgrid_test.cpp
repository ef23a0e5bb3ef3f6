#include "modpair/numgrid.hpp"

#include <doctest.h>

#include <cmath>

using namespace modpair;

TEST_SUITE("numgrid")
{
    TEST_CASE("grid lattice follows theta_j = -L + j h and lambda_k = (k - N/2) pi / L")
    {
        const GridSpec g = make_grid(30.0, 1024);
        CHECK(g.h() == doctest::Approx(60.0 / 1024));
        CHECK(g.theta(0) == -30.0);
        CHECK(g.lambda(512) == 0.0);
        CHECK(g.lambda(513) == doctest::Approx(pi / 30.0));
        CHECK(g.dual().picture == Picture::lambda);
    }

    TEST_CASE("odd or tiny grids are rejected")
    {
        CHECK_THROWS_AS(make_grid(30.0, 1023), Error);
        CHECK_THROWS_AS(make_grid(-1.0, 1024), Error);
    }

    TEST_CASE("fourier of a Gaussian matches its closed-form transform")
    {
        const GridSpec g = make_grid(30.0, 2048);
        for (double c : {-3.0, 0.0, 2.5})
            for (double s : {0.5, 1.0, 2.0}) {
                const WaveFunction f = fourier(gaussian_packet(g, c, s));
                CHECK(relative_distance(f, gaussian_packet(g.dual(), c, s)) < 1e-12);
            }
    }

    TEST_CASE("fourier is unitary and inverted by inverse_fourier")
    {
        const GridSpec g = make_grid(30.0, 1024);
        ProbeParams p;
        const auto probes = probe_family(g, ProbeKind::hermite_like, p, 5, 3);
        for (const auto& f : probes) {
            const WaveFunction F = fourier(f);
            CHECK(std::abs(F.norm() - f.norm()) < 1e-12 * f.norm());
            CHECK(relative_distance(inverse_fourier(F), f) < 1e-13);
        }
    }

    TEST_CASE("the unit multiplier is the identity and multipliers compose")
    {
        const GridSpec g = make_grid(20.0, 512);
        const WaveFunction f = gaussian_packet(g, 1.0, 0.8);
        CHECK(relative_distance(apply_multiplier(f, [](double) { return cplx(1.0); }), f) < 1e-14);
        const auto a = [](double l) { return std::polar(1.0, 0.3 * l); };
        const auto b = [](double l) { return std::polar(1.0, -0.3 * l); };
        CHECK(relative_distance(apply_multiplier(apply_multiplier(f, a), b), f) < 1e-13);
    }

    TEST_CASE("embed and crop are inverse on supported vectors")
    {
        const GridSpec g = make_grid(15.0, 256);
        const WaveFunction f = gaussian_packet(g, 0.0, 1.0);
        const GridSpec big = widened(g, 4);
        CHECK(big.N == 1024);
        CHECK(big.h() == doctest::Approx(g.h()));
        const WaveFunction e = embed(f, big);
        CHECK(e.norm() == doctest::Approx(f.norm()));
        CHECK(relative_distance(crop(e, g), f) == 0.0);
    }

    TEST_CASE("mass_fraction and band_leak measure the expected tails")
    {
        const GridSpec g = make_grid(30.0, 4096);
        const WaveFunction f = gaussian_packet(g, 0.0, 1.0);
        // both report the square root of the relative mass
        CHECK(mass_fraction(f, -30.0, 0.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-2));
        CHECK(mass_fraction(f, -30.0, 30.0) == doctest::Approx(1.0));
        // |f^|^2 = e^{-l^2}, so the mass beyond |l| = 2 is erfc(2)
        CHECK(band_leak(fourier(f), 2.0) == doctest::Approx(std::sqrt(std::erfc(2.0))).epsilon(0.1));
    }

    TEST_CASE("probe families are deterministic in the seed")
    {
        const GridSpec g = make_grid(30.0, 1024);
        ProbeParams p;
        for (ProbeKind k : {ProbeKind::gaussian_bump, ProbeKind::band_limited_random, ProbeKind::hermite_like}) {
            const auto a = probe_family(g, k, p, 3, 11);
            const auto b = probe_family(g, k, p, 3, 11);
            REQUIRE(a.size() == 3);
            for (std::size_t i = 0; i < a.size(); ++i)
                CHECK(distance(a[i], b[i]) == 0.0);
        }
        CHECK(parse_probe_kind("hermite-like") == ProbeKind::hermite_like);
        CHECK_THROWS_AS(parse_probe_kind("nope"), Error);
    }
}
