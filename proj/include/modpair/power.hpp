#pragma once

#include "modpair/numgrid.hpp"

#include <limits>

namespace modpair {

using LinearMap = std::function<WaveFunction(const WaveFunction&)>;

struct SpectralOptions {
    std::size_t restarts = 3;
    std::size_t max_iterations = 400;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::uint64_t seed = 7;
    // a priori norm bound; iteration stops once the estimate is within saturation of it
    double bound = std::numeric_limits<double>::infinity();
    double saturation = 1e-5;
};

struct NormEstimate {
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = true;
};

// sqrt of the top eigenvalue of a positive map A = B* B on vectors of grid g.  When B is given
// the value is ||B v|| at the top vector, which avoids the square-root loss of precision.
NormEstimate power_norm(const LinearMap& A, const GridSpec& g, const SpectralOptions& opt = {},
                        const LinearMap& B = {});

// largest singular value of B, assembled column by column from unit vectors of g
double dense_norm(const LinearMap& B, const GridSpec& g);

} // namespace modpair
