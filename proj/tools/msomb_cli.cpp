// msomb: mean Sombor index toolkit.
//
//   msomb compute   --graph g.txt --alpha 2
//   msomb matrix    --graph g.txt --alpha 2 --out m.csv
//   msomb qspr      --properties octane.csv --property BP --alpha -8.19
//   msomb scan      --properties octane.csv --out table.csv --curve-dir curves/
//   msomb verify    --corpus default
//   msomb enumerate --out skeletons/
//
// Exit codes: 0 success, 1 operational error, 2 verification failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msomb/bounds.hpp"
#include "msomb/corpus.hpp"
#include "msomb/indices.hpp"
#include "msomb/qspr.hpp"
#include "msomb/spectral.hpp"
#include "msomb/trees.hpp"

namespace fs = std::filesystem;
using namespace msomb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_file(path, content);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// Edge-list files in a directory, named by file stem and sorted by name;
// the octane skeletons (IUPAC names) when no directory is given.
std::vector<NamedGraph> load_graph_set(const std::string& dir) {
  std::vector<NamedGraph> graphs;
  if (dir.empty()) {
    for (auto& s : enumerate_octane_skeletons()) graphs.push_back({s.name, std::move(s.graph)});
    return graphs;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) graphs.push_back({f.stem().string(), load_graph(f.string())});
  return graphs;
}

struct Common {
  unsigned jobs = 0;
};

int run_compute(const std::string& graph_path, const std::string& alpha_text, const std::string& format,
                const std::string& out) {
  const Graph g = load_graph(graph_path);
  const Alpha alpha = Alpha::parse(alpha_text);
  const double requested = mean_sombor(g, alpha);
  const auto rows = specializations(g);

  std::ostringstream text;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["alpha"] = to_string(alpha);
    doc["mean_sombor"] = requested;
    auto& table = doc["specializations"] = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      table.push_back({{"alpha", to_string(r.alpha)},
                       {"mean_sombor", r.mean_sombor},
                       {"equivalent", r.equivalent},
                       {"classical", r.classical}});
    text << doc.dump(2) << '\n';
  } else {
    text << "quantity,alpha,value,equivalent,classical\n";
    text << "mSO," << to_string(alpha) << ',' << num(requested) << ",,\n";
    for (const auto& r : rows)
      text << "mSO," << to_string(r.alpha) << ',' << num(r.mean_sombor) << ',' << r.equivalent << ','
           << num(r.classical) << '\n';
  }
  emit(out, text.str());
  return kExitOk;
}

int run_matrix(const std::string& graph_path, const std::string& alpha_text, const std::string& out) {
  const Graph g = load_graph(graph_path);
  const Alpha alpha = Alpha::parse(alpha_text);
  const auto mat = build_matrix(g, alpha);

  std::ostringstream csv;
  write_matrix_csv(csv, mat);
  emit(out, csv.str());

  std::ostream& summary = out.empty() ? std::cerr : std::cout;
  summary << "trace_of_square," << num(trace_of_square(mat)) << '\n';
  if (g.edge_count() > 0) summary << "variance_identity_residual," << num(variance_identity_check(g, alpha)) << '\n';
  return kExitOk;
}

std::string render_reports(const std::vector<RegressionReport>& reports, const std::string& format) {
  std::ostringstream text;
  if (format == "json")
    write_reports_json(text, reports);
  else
    write_reports_csv(text, reports);
  return text.str();
}

int run_qspr(const std::string& props, const std::string& graphs_dir, const std::string& property,
             const std::string& alpha_text, const std::string& format, const std::string& out) {
  const auto ds = load_dataset(load_graph_set(graphs_dir), read_file(props));
  emit(out, render_reports({qspr_at_alpha(ds, property, Alpha::parse(alpha_text))}, format));
  return kExitOk;
}

int run_scan(const std::string& props, const std::string& graphs_dir, std::vector<std::string> properties,
             const std::string& grid_text, const std::string& format, const std::string& out,
             const std::string& curve_dir, unsigned jobs) {
  const auto ds = load_dataset(load_graph_set(graphs_dir), read_file(props));
  if (properties.empty()) properties = ds.usable_properties();
  const AlphaGrid grid = grid_text.empty() ? AlphaGrid{} : AlphaGrid::parse(grid_text);
  if (!curve_dir.empty()) fs::create_directories(curve_dir);

  std::vector<RegressionReport> reports;
  for (const auto& p : properties) {
    const auto result = alpha_scan(ds, p, grid, jobs);
    reports.push_back(result.best);
    if (!curve_dir.empty()) {
      std::ostringstream curve;
      write_curve_csv(curve, result.curve);
      write_file(fs::path(curve_dir) / (p + ".csv"), curve.str());
    }
  }
  emit(out, render_reports(reports, format));
  return kExitOk;
}

int run_verify(const std::string& corpus, std::size_t random_count, std::uint64_t seed,
               const std::string& kalpha, const std::string& out, unsigned jobs) {
  std::vector<NamedGraph> graphs;
  if (corpus == "default" || corpus == "all") graphs = default_corpus();
  if (corpus == "random" || corpus == "all") {
    auto extra = random_corpus(seed, random_count);
    std::move(extra.begin(), extra.end(), std::back_inserter(graphs));
  }

  auto options = BoundSuiteOptions::defaults();
  options.jobs = jobs;
  if (kalpha == "lemma")
    options.kalpha_constants = {KalphaConstant::LemmaRatio};
  else if (kalpha == "both")
    options.kalpha_constants = {KalphaConstant::Printed, KalphaConstant::LemmaRatio};

  const auto reports = run_bound_suite(graphs, options);
  std::ostringstream csv;
  write_bound_reports_csv(csv, reports);
  emit(out, csv.str());

  const auto failures = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.holds(); });
  std::cerr << "verified " << reports.size() << " checks on " << graphs.size() << " graphs";
  if (corpus != "default") std::cerr << " (random seed " << seed << ")";
  std::cerr << ": " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int run_enumerate(const std::string& out_dir) {
  fs::create_directories(out_dir);
  std::ostringstream manifest;
  manifest << "index,name,canonical,file\n";
  int index = 0;
  for (const auto& s : enumerate_octane_skeletons()) {
    char file[16];
    std::snprintf(file, sizeof file, "%02d.txt", ++index);
    write_file(fs::path(out_dir) / file, "# " + s.name + " " + s.canonical + "\n" + to_edge_list(s.graph));
    manifest << index << ",\"" << s.name << "\"," << s.canonical << ',' << file << '\n';
  }
  write_file(fs::path(out_dir) / "manifest.csv", manifest.str());
  std::cout << index << " skeletons written to " << out_dir << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean Sombor index toolkit"};
  app.require_subcommand(1);
  unsigned jobs = 0;
  app.add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::string graph_path, alpha_text = "2", format = "csv", out;
  auto* compute = app.add_subcommand("compute", "mSO at alpha plus the classical specializations");
  compute->add_option("--graph", graph_path, "Edge-list file")->required()->check(CLI::ExistingFile);
  compute->add_option("--alpha", alpha_text, "Decimal, 0, inf or -inf");
  compute->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  compute->add_option("--out", out, "Output file (default stdout)");

  auto* matrix = app.add_subcommand("matrix", "Mean Sombor matrix CSV, trace and variance identity residual");
  matrix->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  matrix->add_option("--alpha", alpha_text);
  matrix->add_option("--out", out);

  std::string props, graphs_dir, property, grid_text, curve_dir;
  std::vector<std::string> properties;
  auto* qspr = app.add_subcommand("qspr", "Linear model of one property against mSO at a fixed alpha");
  qspr->add_option("--properties", props, "Properties CSV")->required()->check(CLI::ExistingFile);
  qspr->add_option("--graphs", graphs_dir, "Directory of edge lists (default: octane skeletons)")
      ->check(CLI::ExistingDirectory);
  qspr->add_option("--property", property)->required();
  qspr->add_option("--alpha", alpha_text);
  qspr->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  qspr->add_option("--out", out);

  auto* scan = app.add_subcommand("scan", "Alpha maximising |r| for each property");
  scan->add_option("--properties", props)->required()->check(CLI::ExistingFile);
  scan->add_option("--graphs", graphs_dir)->check(CLI::ExistingDirectory);
  scan->add_option("--property", properties, "Repeatable; default all usable properties");
  scan->add_option("--grid", grid_text, "lo:step:hi (default -10:0.01:10)");
  scan->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", out);
  scan->add_option("--curve-dir", curve_dir, "Write one alpha,r curve CSV per property here");

  std::string corpus = "default", kalpha = "printed";
  std::size_t random_count = 1000;
  std::uint64_t seed = kDefaultRandomSeed;
  auto* verify = app.add_subcommand("verify", "Check every inequality on a graph corpus");
  verify->add_option("--corpus", corpus)->check(CLI::IsMember({"default", "random", "all"}));
  verify->add_option("--random-count", random_count);
  verify->add_option("--seed", seed);
  verify->add_option("--kalpha-constant", kalpha)->check(CLI::IsMember({"printed", "lemma", "both"}));
  verify->add_option("--out", out);

  std::string out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "Write the 18 octane skeletons and a manifest");
  enumerate->add_option("--out", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*compute) return run_compute(graph_path, alpha_text, format, out);
    if (*matrix) return run_matrix(graph_path, alpha_text, out);
    if (*qspr) return run_qspr(props, graphs_dir, property, alpha_text, format, out);
    if (*scan) return run_scan(props, graphs_dir, properties, grid_text, format, out, curve_dir, jobs);
    if (*verify) return run_verify(corpus, random_count, seed, kalpha, out, jobs);
    if (*enumerate) return run_enumerate(out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
