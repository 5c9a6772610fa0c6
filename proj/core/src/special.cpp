#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qg/special.hpp"

namespace qg {

double lanczos_gamma(double x) {
  static constexpr double kG = 7.0;
  static constexpr std::array<double, 9> kCoefficients = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x <= 0.0 && x == std::floor(x)) {
    throw std::domain_error("lanczos_gamma: pole at non-positive integer");
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  }
  const double shifted = x - 1.0;
  double series = kCoefficients[0];
  for (std::size_t i = 1; i < kCoefficients.size(); ++i) {
    series += kCoefficients[i] / (shifted + static_cast<double>(i));
  }
  const double t = shifted + kG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, shifted + 0.5) * std::exp(-t) * series;
}

}  // namespace qg
