#pragma once

#include "qg/field.hpp"

namespace qg {

/// Forward transform, F(m) = sum_x f(x) exp(-i k.x) (L/n)^2.
/// The result is exactly Hermitian. Throws std::invalid_argument on non-finite
/// samples.
SpectralField transform_forward(const RealField& f);

/// Inverse transform, f(x) = L^-2 sum_m F(m) exp(i k.x).
/// Throws std::invalid_argument when the Hermitian defect exceeds 1e-10.
RealField transform_inverse(const SpectralField& spectrum);

inline constexpr double kHermitianTolerance = 1e-10;

namespace detail {

/// In-place unnormalized 2D DFT of an n x n array (sign -1 forward, +1 backward).
void dft2d(std::span<Complex> data, int n, int sign);

}  // namespace detail
}  // namespace qg
