#include "msomb/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "msomb/errors.hpp"
#include "msomb/indices.hpp"
#include "msomb/parallel.hpp"

namespace msomb {

namespace {

constexpr double kEqualityTolerance = 1e-9;
constexpr double kStrictnessTolerance = 1e-12;

void require_edges(const Graph& g, const char* what) {
  if (g.edge_count() == 0) throw ArgumentError(std::string(what) + " needs a graph with at least one edge");
}

void mark_strict(BoundReport& r) {
  r.strict_required = true;
  r.strict_observed = r.slack > kStrictnessTolerance * (1.0 + std::abs(r.lhs) + std::abs(r.rhs));
}

void expect_equality(BoundReport& r, bool predicted, bool iff) {
  r.equality_predicted = predicted;
  r.equality_iff = iff;
}

bool has_unbalanced_edge(const Graph& g) { return !all_edges_balanced(g); }

// (m^{1-1/a} / 2^{1/a}) (M1^{a+1})^{1/a}
double jensen_base(const Graph& g, double alpha) {
  const double m = static_cast<double>(g.edge_count());
  return std::pow(m, 1.0 - 1.0 / alpha) * std::pow(2.0, -1.0 / alpha) *
         std::pow(variable_first_zagreb(g, alpha), 1.0 / alpha);
}

}  // namespace

bool BoundReport::holds() const noexcept {
  if (!pass) return false;
  if (strict_required && !strict_observed) return false;
  if (equality_predicted && !equality_observed) return false;
  if (equality_iff && equality_predicted != equality_observed) return false;
  return true;
}

BoundReport make_bound_report(std::string bound_id, double lhs, double rhs) {
  BoundReport r;
  r.bound_id = std::move(bound_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tol = kEqualityTolerance * (1.0 + std::abs(lhs) + std::abs(rhs));
  r.pass = r.slack >= -r.tol;
  r.equality_observed = std::abs(r.slack) <= r.tol;
  return r;
}

BoundReport check_monotonicity(const Graph& g, const Alpha& a1, const Alpha& a2) {
  if (!(a1 < a2)) throw ArgumentError("monotonicity check needs a1 < a2, got " + to_string(a1) + ", " + to_string(a2));
  auto r = make_bound_report("monotonicity", mean_sombor(g, a1), mean_sombor(g, a2));
  r.alpha = a1;
  r.note = "alpha2=" + to_string(a2);
  expect_equality(r, all_edges_balanced(g), true);
  return r;
}

std::vector<BoundReport> check_chain(const Graph& g) {
  const double values[] = {
      2.0 * inverse_sum_indeg(g),
      reciprocal_randic(g),
      0.25 * ka_index(g, 0.5, 2.0),
      0.5 * first_zagreb(g),
      sombor(g) / std::sqrt(2.0),
  };
  const char* ids[] = {"chain.2ISI<=RR", "chain.RR<=KA_half/4", "chain.KA_half/4<=M1/2", "chain.M1/2<=SO/sqrt2"};
  const bool balanced = all_edges_balanced(g);
  std::vector<BoundReport> out;
  for (std::size_t i = 0; i < 4; ++i) {
    auto r = make_bound_report(ids[i], values[i], values[i + 1]);
    expect_equality(r, balanced, true);
    out.push_back(std::move(r));
  }
  return out;
}

BoundReport check_jensen_m1_bound(const Graph& g, double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha)) throw ArgumentError("Jensen bound needs a finite nonzero alpha");
  require_edges(g, "Jensen bound");
  const double mso = mean_sombor(g, Alpha::finite(alpha));
  const double bound = jensen_base(g, alpha);
  auto r = alpha >= 1.0 ? make_bound_report("jensen_m1", mso, bound) : make_bound_report("jensen_m1", bound, mso);
  r.alpha = Alpha::finite(alpha);

  if (alpha == 1.0) {
    expect_equality(r, true, true);
  } else if (is_connected(g)) {
    const auto tag = regularity_class(g).tag;
    expect_equality(r, tag == RegularityTag::Regular || tag == RegularityTag::Biregular, true);
  } else {
    // Uniform degree pairs still force equality; the converse needs connectivity.
    expect_equality(r, uniform_edge_degree_pair(g), false);
    r.note = "equality clause needs a connected graph";
  }
  return r;
}

double kp_constant(double a, double b, double p) {
  if (!(a > 0.0) || !(a <= b)) throw ArgumentError("kp_constant needs 0 < a <= b");
  if (!(p > 1.0) || !std::isfinite(p)) throw ArgumentError("kp_constant needs a finite p > 1");
  const double q = p / (p - 1.0);
  if (p < 2.0) return std::pow(a / b, 1.0 / (2.0 * q)) / p + std::pow(b / a, 1.0 / (2.0 * p)) / q;
  return std::pow(b / a, 1.0 / (2.0 * q)) / p + std::pow(a / b, 1.0 / (2.0 * p)) / q;
}

double kalpha_power(double alpha, double ratio) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("K_alpha needs 0 < alpha < 1");
  if (!(ratio >= 1.0)) throw ArgumentError("K_alpha needs Delta/delta >= 1");
  const double sq = alpha * alpha;
  if (alpha <= 0.5) return alpha * std::pow(ratio, (alpha - sq) / 2.0) + (1.0 - alpha) * std::pow(ratio, -sq / 2.0);
  return alpha * std::pow(ratio, (sq - alpha) / 2.0) + (1.0 - alpha) * std::pow(ratio, sq / 2.0);
}

BoundReport check_kalpha_bound(const Graph& g, double alpha, KalphaConstant constant) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("K_alpha bound needs 0 < alpha < 1");
  require_edges(g, "K_alpha bound");
  const auto [delta, max_degree] = degree_extremes(g);
  if (delta < 1) throw ArgumentError("K_alpha bound needs minimum degree >= 1");

  const double ratio = static_cast<double>(max_degree) / delta;
  const double k_pow = constant == KalphaConstant::Printed ? kalpha_power(alpha, ratio)
                                                           : kp_constant(1.0, ratio, 1.0 / alpha);
  const double bound = jensen_base(g, alpha) * std::pow(k_pow, 1.0 / alpha);
  auto r = make_bound_report(constant == KalphaConstant::Printed ? "kalpha" : "kalpha.lemma_ratio",
                             mean_sombor(g, Alpha::finite(alpha)), bound);
  r.alpha = Alpha::finite(alpha);
  expect_equality(r, delta == max_degree, true);
  return r;
}

std::vector<BoundReport> check_so_sandwich(const Graph& g, const Alpha& a) {
  const double mso = mean_sombor(g, a);
  const double so = sombor(g);
  const double half = so / std::sqrt(2.0);
  const bool balanced = all_edges_balanced(g);
  const bool strict_trigger = has_unbalanced_edge(g);

  std::vector<BoundReport> out;
  auto non_strict = [&](const char* id, double lhs, double rhs) {
    auto r = make_bound_report(id, lhs, rhs);
    expect_equality(r, balanced, true);
    out.push_back(std::move(r));
  };
  auto strict = [&](const char* id, double lhs, double rhs) {
    auto r = make_bound_report(id, lhs, rhs);
    if (strict_trigger) mark_strict(r);
    out.push_back(std::move(r));
  };

  const double key = a.order_key();
  if (key == 2.0) {
    auto r = make_bound_report("so.identity", mso, half);
    expect_equality(r, true, true);
    out.push_back(std::move(r));
  } else if (key > 2.0) {
    const double scaled = a.kind() == Alpha::Kind::PlusInf ? so : so * std::pow(2.0, -1.0 / key);
    non_strict("so.lower", half, mso);
    strict("so.upper", mso, scaled);
  } else if (a.kind() == Alpha::Kind::Finite && key > 0.0) {
    strict("so.lower", so * std::pow(2.0, -1.0 / key), mso);
    non_strict("so.upper", mso, half);
  } else {
    non_strict("so.upper", mso, half);
  }
  for (auto& r : out) r.alpha = a;
  return out;
}

BoundReport check_ka_powersum_bound(const Graph& g, double alpha, double beta) {
  require_edges(g, "KA power-sum bound");
  const double m = static_cast<double>(g.edge_count());
  const double ka = ka_index(g, alpha, beta);
  const double bound = std::pow(m, 1.0 - beta) * std::pow(variable_first_zagreb(g, alpha), beta);
  const bool at_most = beta > 0.0 && beta < 1.0;
  auto r = at_most ? make_bound_report("ka_powersum", ka, bound) : make_bound_report("ka_powersum", bound, ka);
  r.alpha = Alpha::from_real(alpha);
  r.beta = beta;
  expect_equality(r, beta == 0.0 || beta == 1.0 || alpha == 0.0 || uniform_edge_degree_pair(g), false);
  return r;
}

BoundReport check_mso2_m1_m2_bound(const Graph& g) {
  auto r = make_bound_report("mso2_m1_m2", mean_sombor(g, Alpha::finite(2.0)),
                             first_zagreb(g) - reciprocal_randic(g));
  r.alpha = Alpha::finite(2.0);
  expect_equality(r, all_edges_balanced(g), true);
  return r;
}

BoundSuiteOptions BoundSuiteOptions::defaults() {
  BoundSuiteOptions o;
  o.monotonicity_grid = {Alpha::minus_inf(),  Alpha::finite(-5),  Alpha::finite(-1), Alpha::zero_limit(),
                         Alpha::finite(0.5), Alpha::finite(1),   Alpha::finite(2),  Alpha::finite(3),
                         Alpha::finite(5),   Alpha::plus_inf()};
  o.so_alphas = {Alpha::finite(-1), Alpha::finite(0.5), Alpha::finite(1), Alpha::finite(1.5), Alpha::finite(3)};
  return o;
}

std::vector<BoundReport> run_bound_suite(const std::vector<NamedGraph>& graphs, const BoundSuiteOptions& options) {
  std::vector<std::vector<BoundReport>> per_graph(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    const Graph& g = graphs[i].graph;
    auto& out = per_graph[i];
    const bool has_edges = g.edge_count() > 0;
    const bool no_isolated = degree_extremes(g).min_degree >= 1;

    for (std::size_t k = 0; k + 1 < options.monotonicity_grid.size(); ++k)
      out.push_back(check_monotonicity(g, options.monotonicity_grid[k], options.monotonicity_grid[k + 1]));
    for (auto& r : check_chain(g)) out.push_back(std::move(r));
    if (has_edges) {
      for (const double a : options.jensen_alphas) out.push_back(check_jensen_m1_bound(g, a));
      if (no_isolated)
        for (const auto c : options.kalpha_constants)
          for (const double a : options.kalpha_alphas) out.push_back(check_kalpha_bound(g, a, c));
      for (const double a : options.ka_alphas)
        for (const double b : options.ka_betas) out.push_back(check_ka_powersum_bound(g, a, b));
    }
    for (const auto& a : options.so_alphas)
      for (auto& r : check_so_sandwich(g, a)) out.push_back(std::move(r));
    out.push_back(check_mso2_m1_m2_bound(g));
    for (auto& r : out) r.graph_id = graphs[i].name;
  });

  std::vector<BoundReport> all;
  for (auto& chunk : per_graph) std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
  return all;
}

void write_bound_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
  out << "bound_id,graph_id,alpha,beta,lhs,rhs,slack,pass,equality_predicted,equality_observed,"
         "equality_iff,strict_required,strict_observed,holds,note\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  auto flag = [](bool b) { return b ? "1" : "0"; };
  for (const auto& r : reports) {
    out << r.bound_id << ',' << '"' << r.graph_id << '"' << ',' << (r.alpha ? to_string(*r.alpha) : "") << ','
        << (r.beta ? num(*r.beta) : "") << ',' << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.slack) << ','
        << flag(r.pass) << ',' << flag(r.equality_predicted) << ',' << flag(r.equality_observed) << ','
        << flag(r.equality_iff) << ',' << flag(r.strict_required) << ',' << flag(r.strict_observed) << ','
        << flag(r.holds()) << ',' << '"' << r.note << '"' << '\n';
  }
}

std::string to_string(KalphaConstant c) { return c == KalphaConstant::Printed ? "printed" : "lemma"; }

}  // namespace msomb
