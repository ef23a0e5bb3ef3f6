#include "modpair/inclusion.hpp"
#include "modpair/phases.hpp"

#include <doctest.h>

#include <cmath>

using namespace modpair;

namespace {

const std::vector<std::string> specs = {
    "id", "blaschke:-1i", "blaschke:1-1i;-1-1i", "exp:0.1", "scaling:2", "sinh",
    "conj(blaschke:-1i)", "conj(exp:0.1)", "prod(blaschke:-2i,exp:0.5)", "conj(sinh)",
};

} // namespace

TEST_SUITE("phases")
{
    TEST_CASE("scalar phases are unimodular and symmetric")
    {
        const GridSpec g = make_grid(30.0, 512);
        for (const auto& s : specs) {
            const std::string spec = s;
            CAPTURE(spec);
            const BoundaryPhase phi = parse_phase(s);
            CHECK(check_symmetric(phi, g) < 1e-13);
            for (double l : {-7.3, -0.4, 0.0, 1.1, 9.0})
                CHECK(std::abs(eval_phase(phi, l)) == doctest::Approx(1.0).epsilon(1e-14));
        }
    }

    TEST_CASE("blaschke factor closed form and its continuation")
    {
        const BoundaryPhase b = blaschke_phase({cplx(0.0, -1.0)});
        for (double l : {-2.0, 0.5, 3.0}) {
            const cplx a = eval_phase_analytic(b, l);
            CHECK(std::abs(eval_phase(b, l) - a) < 1e-14);
        }
        // the continuation vanishes at the zero
        CHECK(std::abs(eval_phase_analytic(b, cplx(0.0, -1.0))) < 1e-14);
    }

    TEST_CASE("invalid phases are rejected")
    {
        CHECK_THROWS_AS(blaschke_phase({cplx(0.0, 1.0)}), Error);
        CHECK_THROWS_AS(blaschke_phase({cplx(1.0, -1.0)}), Error);
        CHECK_THROWS_AS(blaschke_phase({}), Error);
        CHECK_THROWS_AS(exponential_phase(-1.0), Error);
    }

    TEST_CASE("capped sinh is exact below the cap and linear beyond it")
    {
        const double cap = 3.0;
        CHECK(capped_sinh(1.2, cap) == doctest::Approx(std::sinh(1.2)));
        CHECK(capped_sinh(-1.2, cap) == doctest::Approx(-std::sinh(1.2)));
        const double slope = std::cosh(cap);
        CHECK(capped_sinh(5.0, cap) == doctest::Approx(std::sinh(cap) + 2.0 * slope));
        CHECK(capped_sinh(-5.0, cap) == doctest::Approx(-std::sinh(cap) - 2.0 * slope));
        CHECK(sinh_cap_for_delay(pi * std::cosh(2.0)) == doctest::Approx(2.0));
    }

    TEST_CASE("phase specs round trip through the canonical text")
    {
        const GridSpec g = make_grid(30.0, 256);
        std::vector<std::string> all = specs;
        all.push_back("mat(blaschke:-1i,id,30)");
        all.push_back("mat(sinh,conj(exp:0.25),12.5)");
        for (const auto& s : all) {
            const std::string spec = s;
            CAPTURE(spec);
            const BoundaryPhase a = parse_phase(s);
            const std::string text = format_phase(a);
            CHECK(format_phase(parse_phase(text)) == text);
            const BoundaryPhase b = parse_phase(text);
            for (std::size_t k = 0; k < g.N; k += 17) {
                const Mat2 x = eval_matrix(a, g.lambda(k));
                const Mat2 y = eval_matrix(b, g.lambda(k));
                for (int e = 0; e < 4; ++e)
                    CHECK(std::abs(x[e] - y[e]) < 1e-14);
            }
        }
        CHECK(format_phase(parse_phase("exp:0.1")) == "exp:0.1");
        const BoundaryPhase b = parse_phase("blaschke:-1i;-0.5-0.5i,+0.5-0.5i");
        CHECK(b.zeros.size() == 3);
    }

    TEST_CASE("malformed specs are errors")
    {
        for (const char* s : {"", "foo", "blaschke:", "blaschke:1i", "exp:x", "conj(id", "mat(id,id)", "id junk"}) {
            const std::string spec = s;
            CAPTURE(spec);
            CHECK_THROWS_AS(parse_phase(s), Error);
        }
    }

    TEST_CASE("parse errors name the offending token")
    {
        try {
            parse_phase("prod(id,bogus)");
            FAIL("accepted bogus");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("bogus") != std::string::npos);
        }
    }

    TEST_CASE("rotated diagonal matrix phases are unitary")
    {
        const BoundaryPhase m = parse_phase("mat(blaschke:-1i,sinh,30)");
        for (double l : {-3.0, 0.2, 4.0}) {
            const Mat2 u = eval_matrix(m, l);
            // U U* = 1
            const cplx a = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
            const cplx b = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
            CHECK(std::abs(a - 1.0) < 1e-14);
            CHECK(std::abs(b) < 1e-14);
        }
    }

    TEST_CASE("inner test separates inner phases from their conjugates")
    {
        const GridSpec g = make_grid(30.0, 2048);
        for (const char* s : {"id", "blaschke:-1i", "exp:0.1", "blaschke:1-1i;-1-1i"}) {
            const std::string spec = s;
            CAPTURE(spec);
            const InnerVerdict v = inner_test(parse_phase(s), g, 4, 7);
            CHECK(v.is_inner);
            CHECK(v.leakage < 1e-9);
        }
        // sinh(z/2) grows in the strip 2 pi < Im z < 4 pi, so neither sinh nor its conjugate is inner
        for (const char* s : {"conj(blaschke:-1i)", "conj(exp:0.1)", "sinh", "conj(sinh)"}) {
            const std::string spec = s;
            CAPTURE(spec);
            const InnerVerdict v = inner_test(parse_phase(s), g, 4, 7);
            CHECK_FALSE(v.is_inner);
        }
    }

    TEST_CASE("matrix inner test")
    {
        const GridSpec g = make_grid(30.0, 2048);
        CHECK(matrix_inner_test(parse_phase("mat(blaschke:-1i,id,30)"), g, 4, 7).is_inner);
        CHECK_FALSE(matrix_inner_test(parse_phase("mat(conj(blaschke:-1i),id,30)"), g, 4, 7).is_inner);
    }

    TEST_CASE("phase operators are unitary")
    {
        const GridSpec g = make_grid(30.0, 2048);
        const WaveFunction f = normalized(gaussian_packet(g, -2.0, 1.0));
        for (const char* s : {"blaschke:-1i", "exp:0.3", "conj(blaschke:-1i)"}) {
            const WaveFunction u = phase_operator(parse_phase(s), f);
            CHECK(u.norm() == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}
