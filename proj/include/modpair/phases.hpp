#pragma once

#include "modpair/numgrid.hpp"

#include <array>
#include <string>
#include <vector>

namespace modpair {

enum class PhaseKind { identity, blaschke, exponential, scaling, sinh, conjugate, product, matrix };

// Unimodular symmetric function of lambda; d = 2 only for the matrix kind.
struct BoundaryPhase {
    PhaseKind kind = PhaseKind::identity;
    std::vector<cplx> zeros;          // blaschke
    double param = 0.0;               // exponential a, scaling c, matrix angle (degrees)
    std::vector<BoundaryPhase> parts; // conjugate: 1, product: any, matrix: 2 diagonal entries

    int dimension() const { return kind == PhaseKind::matrix ? 2 : 1; }
};

using Mat2 = std::array<cplx, 4>; // row-major

BoundaryPhase identity_phase();
// zeros must lie in Im w < 0 and be closed under w -> -conj(w)
BoundaryPhase blaschke_phase(std::vector<cplx> zeros);
BoundaryPhase exponential_phase(double a);
BoundaryPhase scaling_phase(double c);
BoundaryPhase sinh_phase();
BoundaryPhase conjugate_phase(const BoundaryPhase& phi);
BoundaryPhase product_phase(std::vector<BoundaryPhase> factors);
// R(angle) diag(a, b) R(angle)^T with scalar a, b
BoundaryPhase matrix_phase(const BoundaryPhase& a, const BoundaryPhase& b, double degrees);

// sinh(x) for |x| <= cap, continued linearly beyond; cap >= 700 clamps instead
double capped_sinh(double x, double cap);
// largest sinh argument whose group delay pi cosh stays below the distance d
double sinh_cap_for_delay(double d);

// sinh factors use capped_sinh(lambda/2, sinh_cap)
cplx eval_phase(const BoundaryPhase& phi, double lambda, double sinh_cap = 700.0);
// analytic continuation of a scalar phase to complex arguments (unclamped)
cplx eval_phase_analytic(const BoundaryPhase& phi, cplx z);
Mat2 eval_matrix(const BoundaryPhase& phi, double lambda, double sinh_cap = 700.0);

// max over the dual grid of |phi(-lambda) - conj(phi(lambda))|, entrywise
double check_symmetric(const BoundaryPhase& phi, const GridSpec& grid);

// phi(ln Delta) as the lambda-multiplier phi(-2 pi lambda), periodic on the grid of psi
WaveFunction phase_operator(const BoundaryPhase& phi, const WaveFunction& psi);

struct InnerVerdict {
    double leakage = 0.0;
    bool is_inner = false;
    double tolerance = 1e-3;
    std::size_t probes = 0;
    std::string test_set;
};

InnerVerdict inner_test(const BoundaryPhase& phi, const GridSpec& grid, std::size_t count,
                        std::uint64_t seed, double tol = 1e-3);
InnerVerdict matrix_inner_test(const BoundaryPhase& V, const GridSpec& grid, std::size_t count,
                               std::uint64_t seed, double tol = 1e-3);

// psi(theta) - (1/pi) int_0^inf e^{-u/2pi} psi(theta + u) du by a recursive exponential sum
WaveFunction blaschke_kernel_apply(const WaveFunction& psi);

// Mini-grammar: id | blaschke:<z>[;,]<z>... | exp:<a> | scaling:<c> | sinh
//   | conj(<spec>) | prod(<spec>,<spec>,...) | mat(<spec>,<spec>,<degrees>)
// Inside parentheses blaschke zeros are separated by ';' only.
BoundaryPhase parse_phase(const std::string& spec);
std::string format_phase(const BoundaryPhase& phi);

} // namespace modpair
