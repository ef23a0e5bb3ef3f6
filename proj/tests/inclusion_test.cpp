#include "modpair/inclusion.hpp"
#include "modpair/suites.hpp"

#include <doctest.h>

#include <cmath>

using namespace modpair;

TEST_SUITE("inclusion")
{
    TEST_CASE("trend verdicts")
    {
        CHECK(trend_verdict(1e-5, 1e-6, 1e-3) == Answer::yes);
        CHECK(trend_verdict(1e-17, 2e-17, 1e-3) == Answer::yes);
        CHECK(trend_verdict(0.3, 0.31, 1e-3) == Answer::no);
        CHECK(trend_verdict(1e-4, 2e-4, 1e-3) == Answer::indeterminate);
        CHECK(trend_verdict(0.3, 0.01, 1e-3) == Answer::indeterminate);
        CHECK(trend_verdict(0.005, 0.004, 1e-3) == Answer::indeterminate);
        CHECK(std::string(to_string(Answer::no)) == "false");
    }

    TEST_CASE("the trivial pair is the Weyl group")
    {
        const GridSpec g = make_grid(30.0, 1024);
        const StandardPairModel p(identity_phase(), g);
        const WaveFunction f = normalized(gaussian_packet(g, -2.0, 1.0));
        CHECK(relative_distance(pair_apply_U(p, 0.7, f), weyl(0.7, f)) < 1e-12);
    }

    TEST_CASE("pair groups are unitary and U(-s) inverts U(s)")
    {
        const GridSpec g = make_grid(30.0, 1024);
        for (const char* s : {"blaschke:-1i", "exp:0.1", "sinh"}) {
            const std::string spec = s;
            CAPTURE(spec);
            const StandardPairModel p(parse_phase(s), g);
            const WaveFunction f = normalized(gaussian_packet(g, -3.0, 0.8));
            const WaveFunction back = p.restrict_to_grid(pair_apply_U(p, -0.6, pair_apply_U(p, 0.6, f)));
            CHECK(relative_distance(back, f) < 1e-12);
            CHECK(pair_apply_U(p, 2.0, f).norm() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(relative_distance(p.restrict_to_grid(pair_apply_U(p, 0.0, f)), f) < 1e-14);
        }
    }

    TEST_CASE("the scaling phase c = 2 conjugates the Weyl group to half speed")
    {
        const GridSpec g = make_grid(30.0, 2048);
        const StandardPairModel p(parse_phase("scaling:2"), g);
        const WaveFunction f = normalized(gaussian_packet(g, -2.0, 1.0));
        const double t0 = std::log(2.0) / (2.0 * pi);
        for (double s : {-1.5, 0.5, 2.0}) {
            const WaveFunction u = p.restrict_to_grid(pair_apply_U(p, s, f));
            CHECK(relative_distance(u, modular_flow(t0, weyl(s, modular_flow(-t0, f)))) <= 1e-9);
            CHECK(relative_distance(u, weyl(0.5 * s, f)) <= 1e-9);
        }
    }

    TEST_CASE("exp and scaling phases only rescale the generator")
    {
        const GridSpec g = make_grid(30.0, 1024);
        const StandardPairModel p(parse_phase("exp:0.1"), g);
        CHECK(p.factors().trivial_rest());
        CHECK(p.kappa() != doctest::Approx(1.0));
    }

    TEST_CASE("relative phase of equal pairs is trivial")
    {
        const GridSpec g = make_grid(30.0, 1024);
        const StandardPairModel a(parse_phase("blaschke:-1i"), g), b(parse_phase("blaschke:-1i"), g);
        const BoundaryPhase r = relative_phase(a, b);
        for (double l : {-2.0, 0.0, 3.0})
            CHECK(std::abs(eval_phase(r, l) - 1.0) < 1e-14);
    }

    TEST_CASE("known pairs get their closed-form verdicts with agreeing detectors")
    {
        const GridSpec g = make_grid(30.0, 2048);
        for (const auto& k : known_pairs()) {
            CAPTURE(k.phase1);
            CAPTURE(k.phase2);
            const InclusionVerdict v = check_inclusion(parse_phase(k.phase1), parse_phase(k.phase2), g);
            CHECK(v.agreement);
            CHECK(v.verdict == (k.included ? Answer::yes : Answer::no));
        }
    }

    TEST_CASE("orthogonality of disjoint spectral windows")
    {
        const GridSpec g = make_grid(30.0, 2048);
        const StandardPairModel p1(parse_phase("blaschke:-1i"), g), p2(identity_phase(), g, p1.pad());
        const NormEstimate e = orthogonality_defect(p1, p2, {0.5, 1.0}, {2.0, 3.0});
        CHECK(e.value <= 1e-3);
        CHECK_THROWS_AS(orthogonality_defect(p1, p2, {0.5, 2.5}, {2.0, 3.0}), Error);
    }

    TEST_CASE("Wiesbrock cocycle on pair probes")
    {
        const GridSpec g = make_grid(30.0, 2048);
        for (const char* s : {"blaschke:-1i", "exp:0.1", "sinh"}) {
            const std::string spec = s;
            CAPTURE(spec);
            const StandardPairModel p(parse_phase(s), g);
            for (const auto& psi : pair_probes(p, 2, 3))
                for (double t : {0.1, 0.2, 0.4})
                    CHECK(wiesbrock_cocycle_residual(p, t, psi) <= 1e-7);
        }
    }

    TEST_CASE("generator form gap vanishes for equal pairs and is positive for an inclusion")
    {
        const GridSpec g = make_grid(30.0, 2048);
        const StandardPairModel a(parse_phase("blaschke:-1i"), g), b(identity_phase(), g);
        AnalyticProbe probe;
        probe.c = -0.5;
        probe.s = 1.0;
        probe.roots = form_domain_roots(a.phase());
        CHECK(std::abs(generator_form_gap(a, a, probe)) < 1e-12);
        CHECK(generator_form_gap(a, b, probe) >= -1e-9);
    }
}
