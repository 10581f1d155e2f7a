#include "msomb/spectral.hpp"

#include <cmath>
#include <cstdio>

namespace msomb {

EdgeTermStats edge_term_stats(const Graph& g, const Alpha& a) {
  if (g.edge_count() == 0) throw DomainError("edge-term statistics undefined for a graph without edges");
  const EdgeVector<double> terms = edge_terms(g, a);
  const double mean = terms.mean();
  const double sigma2 = (terms.array() - mean).square().mean();
  return {g.edge_count(), mean, sigma2};
}

double variance_identity_check(const Graph& g, const Alpha& a) {
  const auto stats = edge_term_stats(g, a);
  const double m = static_cast<double>(stats.m);
  const double trace = trace_of_square(build_matrix(g, a));
  const double second_moment_part = 0.5 * m * trace;
  const double radicand = second_moment_part - m * m * stats.sigma2;
  if (radicand < -1e-9 * (1.0 + second_moment_part))
    throw IdentityViolation("variance identity radicand is negative: " + std::to_string(radicand));
  return mean_sombor(g, a) - std::sqrt(std::max(radicand, 0.0));
}

void write_matrix_csv(std::ostream& out, const MeanSomborMatrix<double>& mat) {
  char buf[32];
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    for (Eigen::Index j = 0; j < mat.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", mat(i, j));
      if (j > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace msomb
