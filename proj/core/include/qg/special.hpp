#pragma once

#include <vector>

namespace qg {

/// Gamma function by the Lanczos approximation (g = 7, nine terms) with the
/// reflection formula below 1/2. Relative accuracy is about 1e-15 for
/// moderate arguments.
double lanczos_gamma(double x);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// OLS on (log x, log y); the slope is the power-law exponent.
LineFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

/// first * 2^(k / per_octave) for k = 0, 1, ... up to last.
std::vector<double> dyadic_points(double first, double last, int per_octave);

}  // namespace qg
