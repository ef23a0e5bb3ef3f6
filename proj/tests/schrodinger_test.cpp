#include "modpair/inclusion.hpp"
#include "modpair/schrodinger.hpp"

#include <doctest.h>

#include <cmath>

using namespace modpair;

TEST_SUITE("schrodinger")
{
    TEST_CASE("the modular flow translates theta by 2 pi t")
    {
        const GridSpec g = make_grid(30.0, 2048);
        for (double t : {-0.3, 0.1, 0.5}) {
            const WaveFunction moved = modular_flow(t, gaussian_packet(g, -1.0, 0.8));
            CHECK(relative_distance(moved, gaussian_packet(g, -1.0 + 2.0 * pi * t, 0.8)) < 1e-12);
        }
    }

    TEST_CASE("flow group law and margin guard")
    {
        const GridSpec g = make_grid(30.0, 2048);
        const WaveFunction f = gaussian_packet(g, 0.0, 1.0);
        CHECK(relative_distance(modular_flow(0.2, modular_flow(0.3, f)), modular_flow(0.5, f)) < 1e-12);
        CHECK_THROWS_AS(modular_flow(4.0, f), Error);
    }

    TEST_CASE("J is an antiunitary involution commuting with the flow")
    {
        const GridSpec g = make_grid(30.0, 1024);
        ProbeParams p;
        p.momentum_max = 2.0;
        const auto fs = probe_family(g, ProbeKind::gaussian_bump, p, 3, 5);
        for (const auto& f : fs) {
            CHECK(relative_distance(modular_conjugation(modular_conjugation(f)), f) == 0.0);
            const cplx a = inner_product(modular_conjugation(f), modular_conjugation(fs[0]));
            CHECK(std::abs(a - std::conj(inner_product(f, fs[0]))) < 1e-13);
            const WaveFunction lhs = modular_conjugation(modular_flow(0.1, f));
            CHECK(relative_distance(lhs, modular_flow(0.1, modular_conjugation(f))) < 1e-12);
        }
        // the same operator in the lambda picture
        const WaveFunction f = fs[1];
        const WaveFunction viaL = to_picture(modular_conjugation(fourier(f)), Picture::theta);
        CHECK(relative_distance(viaL, modular_conjugation(f)) < 1e-12);
    }

    TEST_CASE("Weyl operators form a unitary group")
    {
        const GridSpec g = make_grid(30.0, 1024);
        const WaveFunction f = gaussian_packet(g, -2.0, 1.0);
        CHECK(relative_distance(weyl(0.7, weyl(-1.2, f)), weyl(-0.5, f)) < 1e-14);
        CHECK(weyl(3.0, f).norm() == doctest::Approx(f.norm()).epsilon(1e-14));
    }

    TEST_CASE("Borchers relations on the 5 x 5 lattice")
    {
        for (std::size_t N : {4096, 8192}) {
            const GridSpec g = make_grid(30.0, N);
            const WaveFunction psi = normalized(gaussian_packet(g, -4.0, 0.7));
            double worst = 0.0;
            for (double t : {-0.5, -0.25, 0.0, 0.25, 0.5})
                for (double s : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
                    const BorchersResidual r = borchers_residual(t, s, psi);
                    worst = std::max({worst, r.flow, r.conjugation});
                }
            CHECK(worst <= 1e-8);
        }
    }

    TEST_CASE("generator expectation of a Gaussian is e^{c + s^2 / 4}")
    {
        const GridSpec g = make_grid(30.0, 4096);
        for (double c : {-2.0, 0.0, 1.5}) {
            const WaveFunction f = normalized(gaussian_packet(g, c, 0.9));
            const double e = std::real(inner_product(f, generator_apply(f)));
            CHECK(e == doctest::Approx(std::exp(c + 0.81 / 4.0)).epsilon(1e-10));
        }
        CHECK_THROWS_AS(generator_apply(gaussian_packet(g, 29.5, 1.0)), Error);
    }

    TEST_CASE("spectral projections are idempotent and split on half-open intervals")
    {
        const GridSpec g = make_grid(20.0, 1024);
        const WaveFunction f = gaussian_packet(g, 0.0, 2.0);
        const WaveFunction a = spectral_projection_base({0.0, 1.0}, f);
        const WaveFunction b = spectral_projection_base({1.0, infinity}, f);
        CHECK(relative_distance(a + b, f) == 0.0);
        CHECK(relative_distance(spectral_projection_base({0.0, 1.0}, a), a) == 0.0);
        CHECK(std::abs(inner_product(a, b)) == 0.0);
        CHECK_THROWS_AS(spectral_projection_base({2.0, 1.0}, f), Error);
        CHECK_THROWS_AS(spectral_projection_base({-1.0, 1.0}, f), Error);
    }

    TEST_CASE("semigroups compose and invert on the cutoff range")
    {
        const GridSpec g = make_grid(20.0, 1024);
        const WaveFunction f = gaussian_packet(g, -1.0, 1.0);
        const WaveFunction d = semigroup_apply(0.5, Semigroup::decaying, semigroup_apply(0.25, Semigroup::decaying, f));
        CHECK(relative_distance(d, semigroup_apply(0.75, Semigroup::decaying, f)) < 1e-14);
        CHECK(d.norm() < f.norm());
        const WaveFunction back = semigroup_apply(0.75, Semigroup::growing, d, 50.0);
        CHECK(relative_distance(back, spectral_projection_base({0.0, 50.0}, f)) < 1e-13);
        CHECK_THROWS_AS(semigroup_apply(10.0, Semigroup::growing, f, 100.0), Error);
    }

    TEST_CASE("closed-form H0 elements pass membership and plain Gaussians fail it")
    {
        const GridSpec g = make_grid(30.0, 4096);
        const WaveFunction h = normalized(closed_form_H0(g, -3.0, 1.5));
        const MembershipVerdict in = membership_H0(h, 1e-6);
        CHECK(in.passes);
        CHECK(in.reflection_residual < 1e-10);
        const MembershipVerdict out = membership_H0(normalized(gaussian_packet(g, -3.0, 1.5)), 1e-6);
        CHECK_FALSE(out.passes);
        CHECK(out.reflection_residual > 0.1);
    }

    TEST_CASE("sample_H0_element symmetrizes band-limited seeds into H0")
    {
        const GridSpec g = make_grid(30.0, 4096);
        const WaveFunction seed = gaussian_packet(g, 1.0, 2.0);
        const WaveFunction h = sample_H0_element(seed, 8.0);
        CHECK(membership_H0(h, 1e-6).passes);
    }
}
