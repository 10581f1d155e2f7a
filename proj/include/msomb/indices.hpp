#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "msomb/alpha.hpp"
#include "msomb/graph.hpp"
#include "msomb/power_mean.hpp"

namespace msomb {

template <typename Scalar>
using EdgeVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// PM_alpha(d_u, d_v) for every edge, in edge order.
template <typename Scalar = double>
EdgeVector<Scalar> edge_terms(const Graph& g, const Alpha& a) {
  EdgeVector<Scalar> terms(static_cast<Eigen::Index>(g.edge_count()));
  Eigen::Index i = 0;
  for (const Edge& e : g.edges())
    terms[i++] = power_mean<Scalar>(Scalar(g.degree(e.u)), Scalar(g.degree(e.v)), a);
  return terms;
}

/// Mean Sombor index: sum over edges of PM_alpha(d_u, d_v).
template <typename Scalar = double>
Scalar mean_sombor(const Graph& g, const Alpha& a) {
  return edge_terms<Scalar>(g, a).sum();
}

namespace detail {

template <typename Scalar, typename EdgeFn>
Scalar edge_sum(const Graph& g, EdgeFn&& fn) {
  Scalar total(0);
  for (const Edge& e : g.edges()) total += fn(Scalar(g.degree(e.u)), Scalar(g.degree(e.v)));
  return total;
}

}  // namespace detail

// The classical indices below are evaluated from their own defining sums,
// never through power_mean.

template <typename Scalar = double>
Scalar inverse_sum_indeg(const Graph& g) {
  return detail::edge_sum<Scalar>(g, [](Scalar x, Scalar y) { return x * y / (x + y); });
}

/// R^{-1}, identical to the variable second Zagreb index M_2^{1/2}.
template <typename Scalar = double>
Scalar reciprocal_randic(const Graph& g) {
  using std::sqrt;
  return detail::edge_sum<Scalar>(g, [](Scalar x, Scalar y) { return sqrt(x * y); });
}

template <typename Scalar = double>
Scalar first_zagreb(const Graph& g) {
  Scalar total(0);
  for (const int d : g.degrees()) total += Scalar(d) * Scalar(d);
  return total;
}

/// M_1^{alpha+1} = sum of d^{alpha+1} over non-isolated vertices.
template <typename Scalar = double>
Scalar variable_first_zagreb(const Graph& g, Scalar alpha) {
  using std::pow;
  Scalar total(0);
  for (const int d : g.degrees())
    if (d > 0) total += pow(Scalar(d), alpha + Scalar(1));
  return total;
}

template <typename Scalar = double>
Scalar sombor(const Graph& g) {
  using std::sqrt;
  return detail::edge_sum<Scalar>(g, [](Scalar x, Scalar y) { return sqrt(x * x + y * y); });
}

/// First (alpha, beta)-KA index: sum of (d_u^alpha + d_v^alpha)^beta.
template <typename Scalar = double>
Scalar ka_index(const Graph& g, Scalar alpha, Scalar beta) {
  using std::pow;
  return detail::edge_sum<Scalar>(g, [&](Scalar x, Scalar y) { return pow(pow(x, alpha) + pow(y, alpha), beta); });
}

/// alpha-Sombor index SO_alpha = KA_{alpha, 1/alpha}.
template <typename Scalar = double>
Scalar alpha_sombor(const Graph& g, Scalar alpha) {
  return ka_index<Scalar>(g, alpha, Scalar(1) / alpha);
}

template <typename Scalar = double>
Scalar sp_min(const Graph& g) {
  return detail::edge_sum<Scalar>(g, [](Scalar x, Scalar y) { return std::min(x, y); });
}

template <typename Scalar = double>
Scalar sp_max(const Graph& g) {
  return detail::edge_sum<Scalar>(g, [](Scalar x, Scalar y) { return std::max(x, y); });
}

struct IndexParams {
  std::optional<double> alpha;
  std::optional<double> beta;
};

/// Name-dispatched classical index. Recognised names:
///   ISI, RR (alias R-1, M2^1/2), M1, M1var (alpha), SO, SOalpha (alpha),
///   KA (alpha, beta), SPmin, SPmax.
/// Throws ArgumentError for an unknown name or when the parameters do not
/// match what the index requires.
double classical_index(const Graph& g, std::string_view name, const IndexParams& params = {});

/// One row of the table relating mSO at a fixed alpha to a classical index.
struct Specialization {
  Alpha alpha;
  std::string equivalent;  // e.g. "2*ISI"
  double mean_sombor;      // via power_mean
  double classical;        // via the classical index alone
};

/// mSO at alpha in {-inf, -1, 0, 1/2, 1, 2, 3, +inf} alongside the classical
/// index each one reduces to.
std::vector<Specialization> specializations(const Graph& g);

}  // namespace msomb
