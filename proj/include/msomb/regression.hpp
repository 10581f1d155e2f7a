#pragma once

#include <cstddef>
#include <span>

namespace msomb {

/// Ordinary least squares y = c1 x + c2 with the usual summary statistics.
struct LinearFit {
  double c1 = 0.0;  // slope
  double c2 = 0.0;  // intercept
  double r = 0.0;   // Pearson correlation
  double se = 0.0;  // sqrt(sum resid^2 / (n - 2))
  double f = 0.0;   // r^2 (n - 2) / (1 - r^2); +inf for a perfect fit
  double sf = 0.0;  // P(F_{1, n-2} >= f)
  std::size_t n = 0;
};

/// Throws ArgumentError for mismatched lengths or n < 3, and
/// DegenerateDataError when x or y is constant.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

}  // namespace msomb
