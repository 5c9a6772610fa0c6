#pragma once

#include <cstdint>

#include "qg/field.hpp"

namespace qg {

/// Counter-based uniform stream: SplitMix64 finalizer applied to
/// seed + (counter + 1) * 0x9E3779B97F4A7C15, mapped to [-1, 1) from the top
/// 53 bits.
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

/// Parameters of a random real, mean-free, band-limited field.
struct BandLimitedSpec {
  std::uint64_t seed = 0;
  double k_min = 1.0;  ///< inclusive bound on |m| in lattice units
  double k_max = 4.0;  ///< inclusive bound on |m| in lattice units
  double amplitude = 1.0;  ///< root-mean-square value of the field
};

/// Draws the field f(x) = sum_m c_m exp(i k(m).x) with c_{-m} = conj(c_m).
/// For each mode m = (m1, m2) in the half plane (m1 > 0, or m1 = 0 and m2 > 0)
/// with k_min <= |m| <= k_max, c_m = a + i b where
/// a = counter_uniform(seed, 2 c), b = counter_uniform(seed, 2 c + 1) and
/// c = (m1 + 1024) * 2048 + (m2 + 1024). The coefficients are then scaled so the
/// RMS value equals the amplitude. The draw does not depend on n, so the same
/// spec gives the same continuous field on every grid that resolves it.
SpectralField random_bandlimited_spectrum(const Grid2D& grid, const BandLimitedSpec& spec);
RealField random_bandlimited(const Grid2D& grid, const BandLimitedSpec& spec);

}  // namespace qg
