#pragma once

#include <span>
#include <vector>

#include "qg/field.hpp"

namespace qg {

/// Smooth radial cutoff: 1 on [0, 1], 0 on [2, inf), and
/// w(2 - r) / (w(2 - r) + w(r - 1)) in between with w(x) = exp(-1/x).
double lp_cutoff(double r);
/// psi_hat(r) = h(r) - h(2 r), supported in [1/2, 2].
double lp_annulus(double r);
/// phi_hat(r) = h(2 r), supported in [0, 1].
double lp_lowpass(double r);

/// Littlewood-Paley multipliers on the grid lattice. Block j multiplies mode k
/// by psi_hat(|k| / 2^j); the range [j_min, j_max] covers every nonzero mode,
/// and always contains j = 0 so the inhomogeneous decomposition is complete.
class FilterBank {
 public:
  explicit FilterBank(const Grid2D& grid);

  const Grid2D& grid() const { return grid_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  int block_count() const { return j_max_ - j_min_ + 1; }
  bool contains(int j) const { return j >= j_min_ && j <= j_max_; }

  /// Multiplier values in FFT index order.
  std::span<const double> psi(int j) const;
  std::span<const double> phi() const { return phi_; }

 private:
  Grid2D grid_;
  int j_min_;
  int j_max_;
  std::vector<std::vector<double>> psi_;
  std::vector<double> phi_;
};

FilterBank build_filter_bank(const Grid2D& grid);

/// Delta_j f. Throws std::invalid_argument if j is outside the bank.
RealField lp_block(const RealField& f, const FilterBank& bank, int j);
/// S_0 f.
RealField lp_lowpass_part(const RealField& f, const FilterBank& bank);

/// ||Delta_j f||_p for every j in [j_min, j_max], indexed from j_min.
std::vector<double> block_norms(const RealField& f, const FilterBank& bank, double p);

}  // namespace qg
