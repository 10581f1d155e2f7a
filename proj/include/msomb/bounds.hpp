#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "msomb/alpha.hpp"
#include "msomb/graph.hpp"

namespace msomb {

/// Result of checking one inequality on one graph.
///
/// Orientation is normalised: the inequality always reads lhs <= rhs (or
/// lhs < rhs when strict), so slack = rhs - lhs and the check passes when
/// slack >= -tol with tol = 1e-9 (1 + |lhs| + |rhs|).
struct BoundReport {
  std::string bound_id;
  std::string graph_id;
  std::optional<Alpha> alpha;
  std::optional<double> beta;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool equality_predicted = false;
  bool equality_observed = false;
  /// The equality clause is an "if and only if" that applies to this graph.
  bool equality_iff = false;
  /// The inequality is strict here and must show slack > 1e-12 * scale.
  bool strict_required = false;
  bool strict_observed = false;
  std::string note;

  /// pass, plus strictness and the equality clause where they apply.
  bool holds() const noexcept;
};

BoundReport make_bound_report(std::string bound_id, double lhs, double rhs);

/// mSO_{a1} <= mSO_{a2}. Throws ArgumentError unless a1 < a2.
BoundReport check_monotonicity(const Graph& g, const Alpha& a1, const Alpha& a2);

/// 2 ISI <= R^{-1} <= 2^{-2} KA_{1/2,2} <= M1/2 <= 2^{-1/2} SO, one report
/// per link, each side evaluated from the classical index.
std::vector<BoundReport> check_chain(const Graph& g);

/// Jensen bound against (m^{1-1/a} / 2^{1/a}) (M1^{a+1})^{1/a}: mSO below it
/// for a > 1, above it for a < 1. Throws ArgumentError for a = 0 or m = 0.
BoundReport check_jensen_m1_bound(const Graph& g, double alpha);

/// K_p(a, b) of the converse Hölder inequality. Requires 0 < a <= b, p > 1.
double kp_constant(double a, double b, double p);

/// K_alpha^alpha as a function of alpha in (0,1) and ratio = Delta/delta,
/// two branches split at alpha = 1/2.
double kalpha_power(double alpha, double ratio);

enum class KalphaConstant {
  /// K_alpha^alpha = kalpha_power(alpha, Delta/delta).
  Printed,
  /// K_alpha^alpha = kp_constant(1, Delta/delta, 1/alpha): the converse Hölder
  /// constant for terms bounded by [delta, Delta].
  LemmaRatio,
};

/// mSO_a <= (m^{1-1/a} / 2^{1/a}) K_a (M1^{a+1})^{1/a} for 0 < a < 1.
/// Throws ArgumentError for a outside (0,1), m = 0 or an isolated vertex.
BoundReport check_kalpha_bound(const Graph& g, double alpha, KalphaConstant constant = KalphaConstant::Printed);

/// mSO_a against 2^{-1/2} SO and 2^{-1/a} SO; one report per applicable inequality.
std::vector<BoundReport> check_so_sandwich(const Graph& g, const Alpha& a);

/// KA_{a,b} against m^{1-b} (M1^{a+1})^b; direction from b. Throws for m = 0.
BoundReport check_ka_powersum_bound(const Graph& g, double alpha, double beta);

/// mSO_2 <= M1 - M2^{1/2}.
BoundReport check_mso2_m1_m2_bound(const Graph& g);

struct BoundSuiteOptions {
  std::vector<Alpha> monotonicity_grid;
  std::vector<double> jensen_alphas{-2.0, -1.0, 0.5, 2.0, 3.0};
  std::vector<double> kalpha_alphas{0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<KalphaConstant> kalpha_constants{KalphaConstant::Printed};
  std::vector<Alpha> so_alphas;
  std::vector<double> ka_alphas{-1.0, 0.5, 1.0, 2.0};
  std::vector<double> ka_betas{-1.0, 0.0, 0.5, 1.0, 2.0};
  unsigned jobs = 0;

  /// Grids used by the verification suite.
  static BoundSuiteOptions defaults();
};

/// Every check over every graph, in graph order then check order. Checks
/// whose preconditions a graph fails (no edges, isolated vertices) are skipped.
std::vector<BoundReport> run_bound_suite(const std::vector<NamedGraph>& graphs, const BoundSuiteOptions& options);

void write_bound_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports);

std::string to_string(KalphaConstant c);

}  // namespace msomb
