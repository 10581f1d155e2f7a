#pragma once

namespace msomb {

/// Regularized incomplete beta I_x(a, b), by Lentz's continued fraction
/// (convergence |delta - 1| <= 1e-12, at most 300 iterations; throws
/// std::runtime_error if not converged). Requires a, b > 0 and 0 <= x <= 1.
double regularized_incomplete_beta(double a, double b, double x);

/// Upper tail P(F >= f) of the F distribution with (d1, d2) degrees of freedom.
double f_distribution_sf(double f, double d1, double d2);

}  // namespace msomb
