#pragma once

#include "modpair/numgrid.hpp"

namespace modpair::detail {

// In-place unnormalized DFT; sign -1 forward, +1 backward.
void dft(cvec& data, int sign);

} // namespace modpair::detail
