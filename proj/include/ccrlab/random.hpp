#pragma once

#include <cstdint>
#include <random>

#include "ccrlab/antisym_bounds.hpp"
#include "ccrlab/linalg.hpp"

namespace ccr {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream, trial), so trials can run in any order.
Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

/// Upper-triangle entries uniform in [-scale, scale].
RealAntisymMatrix random_antisym(int d, Rng& rng, double scale = 1.0);

/// (G + G^*) / 2 with real and imaginary parts of G uniform in [-1, 1].
CMatrix random_hermitian(int n, Rng& rng);

/// Uniform direction, norm uniform in [0, max_norm].
CVector random_cvector(int m, Rng& rng, double max_norm);

} // namespace ccr
