#include "qg/filter_bank.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qg/transform.hpp"

namespace qg {
namespace {

double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

RealField apply_radial(const RealField& f, std::span<const double> multiplier) {
  SpectralField spectrum = transform_forward(f);
  auto coeffs = spectrum.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] *= multiplier[k];
  return transform_inverse(spectrum);
}

}  // namespace

double lp_cutoff(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double a = bump(2.0 - r);
  const double b = bump(r - 1.0);
  return a / (a + b);
}

double lp_annulus(double r) { return lp_cutoff(r) - lp_cutoff(2.0 * r); }

double lp_lowpass(double r) { return lp_cutoff(2.0 * r); }

FilterBank::FilterBank(const Grid2D& grid) : grid_(grid) {
  const int n = grid.n();
  const double k_min = grid.fundamental();
  const double k_max = grid.fundamental() * std::hypot(n / 2, n / 2);
  j_min_ = std::min(0, static_cast<int>(std::floor(std::log2(k_min))));
  j_max_ = std::max(0, static_cast<int>(std::ceil(std::log2(k_max))));

  std::vector<double> radius(grid.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      radius[grid.flat(i, j)] = std::hypot(grid.wavenumber(i), grid.wavenumber(j));
    }
  }
  phi_.resize(grid.size());
  for (std::size_t k = 0; k < radius.size(); ++k) phi_[k] = lp_lowpass(radius[k]);
  for (int j = j_min_; j <= j_max_; ++j) {
    const double scale = std::ldexp(1.0, -j);
    std::vector<double> block(grid.size());
    for (std::size_t k = 0; k < radius.size(); ++k) block[k] = lp_annulus(radius[k] * scale);
    psi_.push_back(std::move(block));
  }
}

std::span<const double> FilterBank::psi(int j) const {
  if (!contains(j)) {
    throw std::invalid_argument("FilterBank: block " + std::to_string(j) +
                                " outside [" + std::to_string(j_min_) + ", " +
                                std::to_string(j_max_) + "]");
  }
  return psi_[static_cast<std::size_t>(j - j_min_)];
}

FilterBank build_filter_bank(const Grid2D& grid) { return FilterBank(grid); }

RealField lp_block(const RealField& f, const FilterBank& bank, int j) {
  require_same_grid(f.grid(), bank.grid(), "lp_block");
  return apply_radial(f, bank.psi(j));
}

RealField lp_lowpass_part(const RealField& f, const FilterBank& bank) {
  require_same_grid(f.grid(), bank.grid(), "lp_lowpass_part");
  return apply_radial(f, bank.phi());
}

std::vector<double> block_norms(const RealField& f, const FilterBank& bank, double p) {
  require_same_grid(f.grid(), bank.grid(), "block_norms");
  const SpectralField spectrum = transform_forward(f);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(bank.block_count()));
  for (int j = bank.j_min(); j <= bank.j_max(); ++j) {
    SpectralField block = spectrum;
    auto coeffs = block.coeffs();
    auto multiplier = bank.psi(j);
    bool any = false;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      coeffs[k] *= multiplier[k];
      any = any || coeffs[k] != Complex{};
    }
    out.push_back(any ? lp_norm(transform_inverse(block), p) : 0.0);
  }
  return out;
}

}  // namespace qg
