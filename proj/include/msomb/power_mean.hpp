#pragma once

#include <algorithm>
#include <cmath>

#include "msomb/alpha.hpp"
#include "msomb/errors.hpp"

namespace msomb {

/// Power (Hölder) mean of two positive numbers.
///
/// Finite alpha is evaluated in the factored form
///   b * exp(log1p(expm1(alpha * log(o / b)) / 2) / alpha),
/// b = max(x, y) for alpha > 0 and min(x, y) for alpha < 0, o the other
/// value. The exponent argument is never positive, so nothing overflows for
/// any |alpha|, and small |alpha| keeps full relative precision.
template <typename Scalar>
Scalar power_mean(Scalar x, Scalar y, const Alpha& a) {
  using std::exp;
  using std::expm1;
  using std::log;
  using std::log1p;
  using std::sqrt;

  if (!(x > Scalar(0)) || !(y > Scalar(0))) throw DomainError("power mean needs positive arguments");
  if (x == y) return x;

  switch (a.kind()) {
    case Alpha::Kind::ZeroLimit: return sqrt(x * y);
    case Alpha::Kind::MinusInf: return std::min(x, y);
    case Alpha::Kind::PlusInf: return std::max(x, y);
    case Alpha::Kind::Finite: break;
  }
  const Scalar alpha(a.value());
  const Scalar base = alpha > Scalar(0) ? std::max(x, y) : std::min(x, y);
  const Scalar other = alpha > Scalar(0) ? std::min(x, y) : std::max(x, y);
  const Scalar t = alpha * log(other / base);
  return base * exp(log1p(expm1(t) / Scalar(2)) / alpha);
}

}  // namespace msomb
