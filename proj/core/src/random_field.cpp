#include "qg/random_field.hpp"

#include <cmath>
#include <stdexcept>

#include "qg/transform.hpp"

namespace qg {

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-52 - 1.0;
}

SpectralField random_bandlimited_spectrum(const Grid2D& grid, const BandLimitedSpec& spec) {
  if (!(spec.k_min >= 1.0 && spec.k_max >= spec.k_min)) {
    throw std::invalid_argument("random_bandlimited: need 1 <= k_min <= k_max");
  }
  if (spec.k_max >= grid.n() / 2 || spec.k_max >= 1024) {
    throw std::invalid_argument("random_bandlimited: k_max not representable on the grid");
  }
  if (!(spec.amplitude >= 0.0)) {
    throw std::invalid_argument("random_bandlimited: amplitude must be >= 0");
  }
  SpectralField out(grid);
  const int reach = static_cast<int>(std::floor(spec.k_max));
  double power = 0.0;
  for (int m1 = 0; m1 <= reach; ++m1) {
    for (int m2 = -reach; m2 <= reach; ++m2) {
      if (m1 == 0 && m2 <= 0) continue;
      const double radius = std::hypot(m1, m2);
      if (radius < spec.k_min || radius > spec.k_max) continue;
      const auto counter = static_cast<std::uint64_t>((m1 + 1024) * 2048 + (m2 + 1024));
      const Complex c(counter_uniform(spec.seed, 2 * counter),
                      counter_uniform(spec.seed, 2 * counter + 1));
      out.at_mode(m1, m2) = c;
      out.at_mode(-m1, -m2) = std::conj(c);
      power += 2.0 * std::norm(c);
    }
  }
  const double scale = power > 0.0 ? spec.amplitude / std::sqrt(power) : 0.0;
  const double area = grid.period() * grid.period();
  out *= scale * area;
  return out;
}

RealField random_bandlimited(const Grid2D& grid, const BandLimitedSpec& spec) {
  return transform_inverse(random_bandlimited_spectrum(grid, spec));
}

}  // namespace qg
