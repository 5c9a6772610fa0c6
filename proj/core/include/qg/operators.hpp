#pragma once

#include "qg/field.hpp"

namespace qg {

/// Pair of spectral fields sharing one grid (velocity, fluxes).
struct SpectralVector {
  SpectralField first;
  SpectralField second;
};

struct RealVector {
  RealField first;
  RealField second;
};

// Every multiplier below sends the zero mode to 0 unless stated otherwise.
// Multipliers that are odd in k (derivatives, Riesz transforms) also zero the
// Nyquist index along their own axis, where no Hermitian-consistent value
// exists.

/// |k|^(2 alpha) F; requires 0 < alpha <= 1.
SpectralField fractional_laplacian(const SpectralField& spectrum, double alpha);

/// exp(-t |k|^(2 alpha)) F; t = 0 is the identity, t < 0 throws.
SpectralField semigroup_apply(const SpectralField& spectrum, double alpha, double t);

/// R_j F with multiplier -i k_j / |k|; axis is 0 for x1, 1 for x2.
SpectralField riesz(const SpectralField& spectrum, int axis);

/// R_perp F = (-R_2 F, R_1 F).
SpectralVector riesz_perp(const SpectralField& spectrum);

/// i k_j F.
SpectralField partial_derivative(const SpectralField& spectrum, int axis);

/// i k_1 Fx + i k_2 Fy.
SpectralField divergence(const SpectralField& fx, const SpectralField& fy);

/// Zeroes every mode with |m_j| > dealias_fraction * n / 2 on either axis.
SpectralField dealias(const SpectralField& spectrum);

/// Dealiased spectrum of theta * R_perp(other), both given in sample space
/// for theta and spectral space for other.
SpectralVector transport_flux(const RealField& theta, const SpectralField& other);

/// div(theta R_perp theta), computed pseudo-spectrally with the product dealiased.
SpectralField nonlinear_term(const SpectralField& theta_hat);
RealField nonlinear_term(const RealField& theta);

}  // namespace qg
