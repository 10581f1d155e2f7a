#include "msomb/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "msomb/errors.hpp"
#include "msomb/special_functions.hpp"

namespace msomb {

namespace {

bool is_constant(const Eigen::ArrayXd& v) {
  const double spread = v.maxCoeff() - v.minCoeff();
  return spread <= 1e-12 * std::max(1.0, v.abs().maxCoeff());
}

}  // namespace

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("x and y must have the same length");
  if (x.size() < 3) throw ArgumentError("linear fit needs at least 3 samples");

  const auto n = static_cast<Eigen::Index>(x.size());
  const Eigen::Map<const Eigen::ArrayXd> xs(x.data(), n);
  const Eigen::Map<const Eigen::ArrayXd> ys(y.data(), n);
  if (is_constant(xs)) throw DegenerateDataError("predictor is constant");
  if (is_constant(ys)) throw DegenerateDataError("response is constant");

  const Eigen::ArrayXd dx = xs - xs.mean();
  const Eigen::ArrayXd dy = ys - ys.mean();
  const double sxx = dx.square().sum();
  const double syy = dy.square().sum();
  const double sxy = (dx * dy).sum();

  LinearFit fit;
  fit.n = x.size();
  fit.c1 = sxy / sxx;
  fit.c2 = ys.mean() - fit.c1 * xs.mean();
  fit.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);

  const double dof = static_cast<double>(n - 2);
  const Eigen::ArrayXd residuals = ys - (fit.c1 * xs + fit.c2);
  fit.se = std::sqrt(residuals.square().sum() / dof);

  const double r2 = fit.r * fit.r;
  fit.f = r2 < 1.0 ? r2 * dof / (1.0 - r2) : std::numeric_limits<double>::infinity();
  fit.sf = f_distribution_sf(fit.f, 1.0, dof);
  return fit;
}

}  // namespace msomb
