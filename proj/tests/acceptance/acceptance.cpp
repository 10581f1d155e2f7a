// Acceptance runner: `acceptance <criterion>` prints one PASS/FAIL line and
// exits 0 on PASS. Informational lines start with "INFO".
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "msomb/bounds.hpp"
#include "msomb/corpus.hpp"
#include "msomb/indices.hpp"
#include "msomb/power_mean.hpp"
#include "msomb/qspr.hpp"
#include "msomb/regression.hpp"
#include "msomb/spectral.hpp"
#include "msomb/special_functions.hpp"
#include "msomb/trees.hpp"

using namespace msomb;

namespace {

// Tolerances.
constexpr double kMonotoneRelTol = 1e-12;
constexpr double kVarianceRelTol = 1e-9;
constexpr double kTraceRelTol = 1e-12;
constexpr double kSfRelTol = 0.02;
constexpr double kPlantedTol = 1e-9;
constexpr double kAlphaTol = 0.05;
constexpr double kRTol = 0.005;
constexpr double kLimitRelTol = 1e-6;
constexpr std::size_t kRandomGraphs = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<NamedGraph> full_corpus() {
  auto graphs = default_corpus();
  auto random = random_corpus(kDefaultRandomSeed, kRandomGraphs);
  graphs.insert(graphs.end(), random.begin(), random.end());
  return graphs;
}

bool report(int id, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  return pass;
}

bool criterion1() {
  const auto start = Clock::now();
  const auto skeletons = enumerate_octane_skeletons();
  const auto all_trees = enumerate_trees(8);
  const double elapsed = seconds_since(start);

  std::set<std::string> forms;
  bool valid = true;
  for (const auto& s : skeletons) {
    forms.insert(canonical_form(s.graph));
    valid = valid && is_tree(s.graph) && s.graph.vertex_count() == 8 && degree_extremes(s.graph).max_degree <= 4;
  }
  const bool pass = skeletons.size() == 18 && forms.size() == 18 && valid && all_trees.size() == 23 && elapsed < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu skeletons (%zu distinct), %zu trees on 8 vertices, %.3f s", skeletons.size(),
                forms.size(), all_trees.size(), elapsed);
  return report(1, pass, buf);
}

bool criterion2() {
  const auto start = Clock::now();
  const auto graphs = full_corpus();
  const auto grid = BoundSuiteOptions::defaults().monotonicity_grid;
  std::size_t assertions = 0, failures = 0;
  auto check = [&](double lo, double hi) {
    ++assertions;
    if (lo > hi + kMonotoneRelTol * (1.0 + std::abs(lo) + std::abs(hi))) ++failures;
  };
  for (const auto& [name, g] : graphs) {
    std::vector<double> totals;
    for (const auto& a : grid) totals.push_back(mean_sombor(g, a));
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) check(totals[k], totals[k + 1]);
    for (const auto& e : g.edges()) {
      const double x = g.degree(e.u), y = g.degree(e.v);
      for (std::size_t k = 0; k + 1 < grid.size(); ++k) check(power_mean(x, y, grid[k]), power_mean(x, y, grid[k + 1]));
    }
  }
  const double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu assertions on %zu graphs, %zu failures, %.3f s", assertions, graphs.size(),
                failures, elapsed);
  return report(2, failures == 0 && assertions >= 100000 && elapsed < 10.0, buf);
}

bool criterion3() {
  const auto graphs = full_corpus();
  std::size_t links = 0, failures = 0, equality_mismatch = 0;
  for (const auto& [name, g] : graphs) {
    const auto chain = check_chain(g);
    bool all_equal = true;
    for (const auto& r : chain) {
      ++links;
      failures += !r.pass;
      all_equal = all_equal && r.equality_observed;
    }
    // Connected graphs: equality throughout iff regular. A disconnected graph
    // attains it iff every component is regular. Edgeless graphs are
    // 0-regular, although regularity_class tags them Neither.
    const bool regular = g.edge_count() == 0 || regularity_class(g).tag == RegularityTag::Regular;
    const bool expected = is_connected(g) ? regular : all_edges_balanced(g);
    equality_mismatch += all_equal != expected;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu links on %zu graphs, %zu failures, %zu equality mismatches", links,
                graphs.size(), failures, equality_mismatch);
  return report(3, failures == 0 && equality_mismatch == 0, buf);
}

bool criterion4() {
  const auto start = Clock::now();
  const auto graphs = full_corpus();
  auto opts = BoundSuiteOptions::defaults();
  opts.kalpha_constants = {KalphaConstant::Printed, KalphaConstant::LemmaRatio};
  const auto reports = run_bound_suite(graphs, opts);
  const double elapsed = seconds_since(start);

  std::map<std::string, std::pair<std::size_t, std::size_t>> by_id;  // id -> (checks, failures)
  for (const auto& r : reports) {
    auto& [checks, fails] = by_id[r.bound_id];
    ++checks;
    fails += !r.holds();
  }
  std::size_t failures = 0;
  for (const auto& [id, counts] : by_id) {
    if (id == "kalpha.lemma_ratio") continue;
    failures += counts.second;
    if (counts.second != 0) std::printf("INFO %s: %zu of %zu checks fail\n", id.c_str(), counts.second, counts.first);
  }
  const auto& lemma = by_id["kalpha.lemma_ratio"];
  std::printf("INFO kalpha.lemma_ratio (constant from Delta/delta as the converse Hoelder ratio): %zu of %zu fail\n",
              lemma.second, lemma.first);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu checks on %zu graphs, %zu failures, %.3f s", reports.size() - lemma.first,
                graphs.size(), failures, elapsed);
  return report(4, failures == 0 && elapsed < 60.0, buf);
}

bool criterion5() {
  auto grid = BoundSuiteOptions::defaults().monotonicity_grid;
  grid.push_back(Alpha::finite(-2));
  grid.push_back(Alpha::finite(1.5));
  std::size_t checks = 0, failures = 0;
  double worst_residual = 0.0, worst_trace = 0.0;
  for (const auto& [name, g] : default_corpus()) {
    if (g.edge_count() == 0) continue;
    for (const auto& a : grid) {
      ++checks;
      const double mso = mean_sombor(g, a);
      const double residual = std::abs(variance_identity_check(g, a)) / (1.0 + mso);
      const auto m = build_matrix(g, a);
      const double edge_trace = edge_trace_of_square(g, a);
      const double trace_gap = std::abs(trace_of_square_explicit(m) - edge_trace) / (1.0 + edge_trace);
      worst_residual = std::max(worst_residual, residual);
      worst_trace = std::max(worst_trace, trace_gap);
      failures += residual > kVarianceRelTol || trace_gap > kTraceRelTol;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu (graph, alpha) pairs, %zu failures, worst residual %.2e, worst trace gap %.2e",
                checks, failures, worst_residual, worst_trace);
  return report(5, failures == 0, buf);
}

struct PublishedOptimum {
  const char* property;
  Alpha alpha;
  double r;
};

bool criterion6_with_data(const std::string& path) {
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::vector<NamedGraph> graphs;
  for (const auto& s : enumerate_octane_skeletons()) graphs.push_back({s.name, s.graph});
  const auto ds = load_dataset(graphs, text.str());

  const PublishedOptimum table[] = {
      {"AcentFac", Alpha::zero_limit(), -0.990}, {"BP", Alpha::finite(-8.19), 0.886},
      {"HCCP", Alpha::finite(-0.87), 0.928},     {"CT", Alpha::finite(-2.05), 0.717},
      {"DENS", Alpha::finite(-0.53), 0.702},     {"DHFORM", Alpha::finite(-1.28), 0.781},
      {"DHVAP", Alpha::plus_inf(), -0.962},      {"HFORM", Alpha::finite(-4.23), 0.912},
      {"HV", Alpha::minus_inf(), 0.895},         {"HVAP", Alpha::plus_inf(), -0.921},
      {"S", Alpha::finite(0.58), -0.956},
  };
  int matched = 0;
  for (const auto& row : table) {
    if (!ds.usable(row.property)) {
      std::printf("INFO %s: not usable in the supplied data\n", row.property);
      continue;
    }
    const auto best = alpha_scan(ds, row.property).best;
    const bool alpha_ok = row.alpha.is_finite()
                              ? best.alpha.is_finite() && std::abs(best.alpha.value() - row.alpha.value()) <= kAlphaTol
                              : best.alpha == row.alpha;
    const bool r_ok = std::abs(std::abs(best.r) - std::abs(row.r)) <= kRTol;
    matched += alpha_ok && r_ok;
    std::printf("INFO %s: alpha %s (published %s), r %.4f (published %.3f)%s\n", row.property,
                to_string(best.alpha).c_str(), to_string(row.alpha).c_str(), best.r, row.r,
                alpha_ok && r_ok ? "" : " MISMATCH");
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d of 11 properties reproduce the published optimum", matched);
  return report(6, matched >= 9, buf);
}

bool criterion6_fallback() {
  const double sf = f_distribution_sf(749.116, 1, 16);
  const bool sf_ok = std::abs(sf - 7.25e-15) <= kSfRelTol * 7.25e-15;

  // Planted relation: y = 2.5 mSO_{-1.5} - 4 on the skeletons.
  const Alpha planted = Alpha::finite(-1.5);
  std::vector<Molecule> records;
  for (const auto& s : enumerate_octane_skeletons())
    records.push_back({s.name, s.graph, {{"planted", 2.5 * mean_sombor(s.graph, planted) - 4.0}}});
  const QsprDataset ds(records, {"planted"});
  const auto at = qspr_at_alpha(ds, "planted", planted);
  const bool fit_ok = std::abs(at.r - 1.0) <= kPlantedTol && std::abs(at.c1 - 2.5) <= kPlantedTol &&
                      std::abs(at.c2 + 4.0) <= kPlantedTol;
  const auto scan = alpha_scan(ds, "planted");
  const bool scan_ok = scan.best.alpha.is_finite() && std::abs(scan.best.alpha.value() + 1.5) <= 1e-3 &&
                       std::abs(scan.best.r - 1.0) <= kPlantedTol;
  std::printf("INFO experimental CSV not supplied (set MSOMB_OCTANE_CSV); using the fallback criterion\n");
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "sf(749.116; 1, 16) = %.4e (target 7.25e-15 within 2%%); planted fit r=%.12f c1=%.12f c2=%.12f; "
                "scan alpha=%s",
                sf, at.r, at.c1, at.c2, to_string(scan.best.alpha).c_str());
  return report(6, sf_ok && fit_ok && scan_ok, buf);
}

bool criterion6() {
  const char* path = std::getenv("MSOMB_OCTANE_CSV");
  return path && *path ? criterion6_with_data(path) : criterion6_fallback();
}

bool criterion7() {
  std::size_t graphs = 0, failures = 0, overflow = 0, outside_envelope = 0;
  double worst = 0.0;
  const double envelope = 1.0 - std::pow(2.0, -1.0 / 38.0);
  for (const auto& [name, g] : full_corpus()) {
    if (g.edge_count() == 0 || degree_extremes(g).max_degree > 8) continue;
    ++graphs;
    for (const double sign : {1.0, -1.0}) {
      const double finite = mean_sombor(g, Alpha::finite(38.0 * sign));
      const double limit = mean_sombor(g, sign > 0 ? Alpha::plus_inf() : Alpha::minus_inf());
      if (!std::isfinite(finite)) ++overflow;
      const double rel = std::abs(finite - limit) / limit;
      worst = std::max(worst, rel);
      failures += rel > kLimitRelTol;
      // PM_38 lies in [2^{-1/38} max, max]; PM_-38 in [min, 2^{1/38} min].
      const double lo = sign > 0 ? limit * (1.0 - envelope) : limit;
      const double hi = sign > 0 ? limit : limit * std::pow(2.0, 1.0 / 38.0);
      outside_envelope += finite < lo * (1 - 1e-14) || finite > hi * (1 + 1e-14);
    }
  }
  std::printf("INFO no overflow: %s; inside the 2^(1/38) envelope: %zu violations; envelope width %.4f\n",
              overflow == 0 ? "yes" : "no", outside_envelope, envelope);
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu graphs with max degree <= 8, %zu comparisons beyond 1e-6 relative, worst %.3e",
                graphs, failures, worst);
  return report(7, failures == 0 && overflow == 0, buf);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= 7; ++i) selected.push_back(i);
  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > 7) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 1;
    }
    try {
      all = criteria[id - 1]() && all;
    } catch (const std::exception& e) {
      all = report(id, false, std::string("exception: ") + e.what()) && all;
    }
  }
  return all ? 0 : 1;
}
