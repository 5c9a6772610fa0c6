#pragma once

#include <vector>

#include "qg/field.hpp"

namespace qg::detail {

/// |k|^(2 alpha) in FFT index order.
std::vector<double> dissipation_symbol(const Grid2D& grid, double alpha);

/// Duhamel integral of per-node source spectra (already differentiated),
/// linear in time between nodes, with exact exponential weights.
std::vector<SpectralField> duhamel_spectral(const std::vector<SpectralField>& source,
                                            const std::vector<double>& times,
                                            const std::vector<double>& symbol);

/// Spectra of B[theta1, theta2] at every node given theta1 in sample space and
/// theta2 in spectral space.
std::vector<SpectralField> bilinear_spectral(const std::vector<RealField>& theta1,
                                             const std::vector<SpectralField>& theta2,
                                             const std::vector<double>& times,
                                             const std::vector<double>& symbol);

void require_matching_nodes(const std::vector<double>& times,
                            const std::vector<double>& nodes, const char* what);

}  // namespace qg::detail
