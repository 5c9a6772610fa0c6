#include <cmath>
#include <stdexcept>

#include "qg/mild.hpp"

namespace qg {

TimeGrid::TimeGrid(double horizon, int intervals, double gamma)
    : horizon_(horizon), intervals_(intervals), gamma_(gamma) {
  if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: T must be > 0");
  if (intervals < 1) throw std::invalid_argument("TimeGrid: M must be >= 1");
  if (!(gamma >= 1.0)) throw std::invalid_argument("TimeGrid: gamma must be >= 1");
  nodes_.reserve(static_cast<std::size_t>(intervals) + 1);
  for (int m = 0; m <= intervals; ++m) {
    nodes_.push_back(horizon * std::pow(static_cast<double>(m) / intervals, gamma));
  }
  nodes_.back() = horizon;
}

namespace {

constexpr double kSeriesSwitch = 0.5;

// sum_k (-1)^k c(k) z^k / (k+2)!
template <typename Coefficient>
double alternating_series(double z, Coefficient&& coefficient) {
  double power = 1.0;
  double factorial = 2.0;
  double sum = 0.0;
  for (int k = 0; k < 25; ++k) {
    sum += coefficient(k) * power / factorial;
    power *= -z;
    factorial *= (k + 3);
  }
  return sum;
}

}  // namespace

double phi1(double z) {
  if (z == 0.0) return 1.0;
  return -std::expm1(-z) / z;
}

double phi2(double z) {
  if (std::abs(z) < kSeriesSwitch) {
    return alternating_series(z, [](int) { return 1.0; });
  }
  return (std::expm1(-z) + z) / (z * z);
}

double ramp_weight(double z) {
  if (std::abs(z) < kSeriesSwitch) {
    return alternating_series(z, [](int k) { return k + 1.0; });
  }
  return (1.0 - std::exp(-z) * (1.0 + z)) / (z * z);
}

}  // namespace qg
