#pragma once

#include "modpair/numgrid.hpp"

namespace modpair {

inline constexpr double euler_gamma = 0.577215664901532860606512090082;

// Lanczos (g = 7) with reflection for Re z < 1/2.
cplx complex_gamma(cplx z);
// log Gamma on some branch; exp() of it is Gamma
cplx complex_lgamma(cplx z);

// ln(-i s) on the branch with cut along the negative reals
cplx log_minus_is(double s);
// regular part at 0 of e^{-z ln(-is)} Gamma(z) = 1/z + F(z)
cplx ts_regular_origin(double s);

struct TsKernel {
    double s = 1.0;
    GridSpec grid;               // lambda-picture grid the kernel is sampled on
    double delta_weight = 0.5;
    std::vector<cplx> samples;   // offsets -N/2..N/2, entry m + N/2; the m = 0 entry is unused
    cplx origin_correction;      // F(0) / 2 pi
    double taper = 0.2;          // fraction of the offset range rolled off to zero

    cplx at(long m) const { return samples[static_cast<std::size_t>(m + static_cast<long>(grid.N / 2))]; }
};

TsKernel build_ts_kernel(double s, const GridSpec& grid, double taper = 0.2);

// Principal-value convolution of a lambda-picture vector with T_s.
WaveFunction apply_ts(const TsKernel& kernel, const WaveFunction& psihat);

} // namespace modpair
