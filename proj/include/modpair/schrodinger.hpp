#pragma once

#include "modpair/numgrid.hpp"

#include <limits>
#include <utility>

namespace modpair {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Spectral interval (a, b) of P0 = e^theta, 0 <= a < b <= infinity.
struct Interval {
    double a = 0.0;
    double b = 1.0;
};

// Translation by 2 pi t, realized as the lambda-multiplier e^{-2 pi i t lambda}.
WaveFunction modular_flow(double t, const WaveFunction& psi);
// conj(psi(theta)), or conj(psihat(-lambda)) in the lambda-picture
WaveFunction modular_conjugation(const WaveFunction& psi);
// multiplication by e^{i s e^theta}
WaveFunction weyl(double s, const WaveFunction& psi);

struct BorchersResidual {
    double flow = 0.0;        // Delta^{it} U(s) Delta^{-it} vs U(e^{-2 pi t} s)
    double conjugation = 0.0; // J U(s) J vs U(-s)
};
BorchersResidual borchers_residual(double t, double s, const WaveFunction& psi);

// P0 psi = e^theta psi
WaveFunction generator_apply(const WaveFunction& psi);
// multiplication by the indicator of ln a <= theta < ln b
WaveFunction spectral_projection_base(Interval iv, const WaveFunction& psi);

enum class Semigroup { decaying, growing };
// e^{-y P0}, or e^{+y P0} E0[(0, cutoff)]
WaveFunction semigroup_apply(double y, Semigroup dir, const WaveFunction& psi,
                             double cutoff = infinity);

struct MembershipOptions {
    double band = 5.0;         // |lambda| window on which e^{+-pi lambda} is evaluated
    double domain_bound = 4.0; // allowed weighted mass relative to ||psi||^2
    double leak_limit = 1e-6;  // relative mass tolerated outside the band
};

struct MembershipVerdict {
    double reflection_residual = 0.0;
    double domain_weight = 0.0;
    double band_leak = 0.0;
    double tolerance = 0.0;
    bool passes = false;
};

MembershipVerdict membership_H0(const WaveFunction& psi, double tol,
                                const MembershipOptions& opt = {});

// (psi + S psi)/2 with (S psi)^(lambda) = e^{pi lambda} conj(psihat(-lambda)); lambda-picture result.
WaveFunction sample_H0_element(const WaveFunction& seed, double band = 20.0);

} // namespace modpair
