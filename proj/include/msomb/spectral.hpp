#pragma once

#include <cstddef>
#include <ostream>

#include <Eigen/Core>

#include "msomb/alpha.hpp"
#include "msomb/errors.hpp"
#include "msomb/graph.hpp"
#include "msomb/indices.hpp"
#include "msomb/power_mean.hpp"

namespace msomb {

/// Adjacency-patterned matrix with a_uv = PM_alpha(d_u, d_v) on edges.
template <typename Scalar>
using MeanSomborMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
MeanSomborMatrix<Scalar> build_matrix(const Graph& g, const Alpha& a) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  MeanSomborMatrix<Scalar> mat = MeanSomborMatrix<Scalar>::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const Scalar entry = power_mean<Scalar>(Scalar(g.degree(e.u)), Scalar(g.degree(e.v)), a);
    mat(e.u, e.v) = entry;
    mat(e.v, e.u) = entry;
  }
  return mat;
}

/// tr(M^2) of a symmetric matrix, as the sum of squared entries.
///
/// Over a mean Sombor matrix this is 2 * sum over edges of PM_alpha^2: each
/// edge contributes two symmetric entries.
template <typename Derived>
typename Derived::Scalar trace_of_square(const Eigen::MatrixBase<Derived>& mat) {
  return mat.cwiseAbs2().sum();
}

/// tr(M^2) by explicit multiplication. O(n^3); kept as a cross-check.
template <typename Derived>
typename Derived::Scalar trace_of_square_explicit(const Eigen::MatrixBase<Derived>& mat) {
  return (mat * mat).trace();
}

/// 2 * sum over edges of PM_alpha(d_u, d_v)^2, without building the matrix.
template <typename Scalar = double>
Scalar edge_trace_of_square(const Graph& g, const Alpha& a) {
  return Scalar(2) * edge_terms<Scalar>(g, a).squaredNorm();
}

struct EdgeTermStats {
  std::size_t m;
  double mean;
  double sigma2;  // population variance of the edge terms
};

/// Mean and variance of {PM_alpha(d_u, d_v) : uv in E}. Throws DomainError when m = 0.
EdgeTermStats edge_term_stats(const Graph& g, const Alpha& a);

/// mSO_alpha - sqrt((m/2) tr(M^2) - m^2 sigma^2), with the true trace of M^2.
///
/// Throws DomainError when m = 0 and IdentityViolation when the radicand is
/// negative beyond roundoff.
double variance_identity_check(const Graph& g, const Alpha& a);

/// One row per line, comma-separated, 17 significant digits.
void write_matrix_csv(std::ostream& out, const MeanSomborMatrix<double>& mat);

}  // namespace msomb
