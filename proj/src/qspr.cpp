#include "msomb/qspr.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include <Eigen/Core>
#include <json.hpp>

#include "msomb/errors.hpp"
#include "msomb/golden_section.hpp"
#include "msomb/indices.hpp"
#include "msomb/parallel.hpp"
#include "msomb/regression.hpp"

namespace msomb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// RFC 4180 style: cells may be double-quoted, with "" for a literal quote.
std::optional<std::vector<std::string>> split_cells(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t pos = 0;
  for (;;) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::string cell;
    if (pos < line.size() && line[pos] == '"') {
      ++pos;
      for (;;) {
        if (pos >= line.size()) return std::nullopt;
        if (line[pos] == '"') {
          if (pos + 1 < line.size() && line[pos + 1] == '"') {
            cell.push_back('"');
            pos += 2;
            continue;
          }
          ++pos;
          break;
        }
        cell.push_back(line[pos++]);
      }
      const auto comma = line.find(',', pos);
      if (!trim(line.substr(pos, comma == std::string_view::npos ? line.size() - pos : comma - pos)).empty())
        return std::nullopt;
      pos = comma;
    } else {
      const auto comma = line.find(',', pos);
      cell = trim(line.substr(pos, comma == std::string_view::npos ? line.size() - pos : comma - pos));
      pos = comma;
    }
    cells.push_back(std::move(cell));
    if (pos == std::string_view::npos) return cells;
    ++pos;
  }
}

std::optional<double> parse_number(std::string_view cell) {
  double value = 0.0;
  const char* first = cell.data();
  if (!cell.empty() && cell.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, cell.data() + cell.size(), value, std::chars_format::general);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

struct PropertyColumn {
  std::vector<const Molecule*> molecules;
  std::vector<double> values;
};

PropertyColumn column(const QsprDataset& ds, std::string_view property) {
  if (!ds.usable(property))
    throw ArgumentError("property '" + std::string(property) + "' is unusable (fewer than " +
                        std::to_string(QsprDataset::kMinSamples) + " values)");
  PropertyColumn col;
  for (const auto& m : ds.records()) {
    const auto it = m.properties.find(std::string(property));
    if (it == m.properties.end()) continue;
    col.molecules.push_back(&m);
    col.values.push_back(it->second);
  }
  return col;
}

std::vector<double> predictor(const PropertyColumn& col, const Alpha& a) {
  std::vector<double> x;
  x.reserve(col.molecules.size());
  for (const Molecule* m : col.molecules) x.push_back(mean_sombor(m->graph, a));
  return x;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

QsprDataset::QsprDataset(std::vector<Molecule> records, std::vector<std::string> property_names)
    : records_(std::move(records)), property_names_(std::move(property_names)) {
  std::set<std::string> names;
  for (const auto& m : records_) {
    if (!names.insert(m.name).second) throw ArgumentError("duplicate molecule name '" + m.name + "'");
    if (m.graph.edge_count() == 0) throw ArgumentError("molecule '" + m.name + "' has an empty graph");
  }
}

std::size_t QsprDataset::sample_count(std::string_view property) const {
  const std::string key(property);
  return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(),
                                                [&](const Molecule& m) { return m.properties.contains(key); }));
}

bool QsprDataset::usable(std::string_view property) const { return sample_count(property) >= kMinSamples; }

std::vector<std::string> QsprDataset::usable_properties() const {
  std::vector<std::string> out;
  for (const auto& p : property_names_)
    if (usable(p)) out.push_back(p);
  return out;
}

QsprDataset load_dataset(const std::vector<NamedGraph>& graphs, std::string_view properties_csv) {
  std::map<std::string, const Graph*, std::less<>> by_name;
  for (const auto& g : graphs)
    if (!by_name.emplace(g.name, &g.graph).second) throw ArgumentError("duplicate graph name '" + g.name + "'");

  std::vector<std::string> header;
  std::vector<Molecule> records;
  std::set<std::string, std::less<>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= properties_csv.size()) {
    const auto nl = properties_csv.find('\n', pos);
    const auto raw = properties_csv.substr(pos, nl == std::string_view::npos ? properties_csv.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? properties_csv.size() + 1 : nl + 1;
    ++line_no;
    if (trim(raw).empty()) continue;

    const auto split = split_cells(raw);
    if (!split) throw ParseError(line_no, "unterminated or malformed quoted cell");
    const auto& cells = *split;
    if (header.empty()) {
      if (cells.front() != "name") throw ParseError(line_no, "header must start with 'name'");
      std::set<std::string> distinct;
      for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].empty()) throw ParseError(line_no, "empty property name in header");
        if (!distinct.insert(cells[i]).second) throw ParseError(line_no, "duplicate property '" + cells[i] + "'");
        header.emplace_back(cells[i]);
      }
      continue;
    }

    if (cells.size() != header.size() + 1)
      throw ParseError(line_no, "expected " + std::to_string(header.size() + 1) + " cells, got " +
                                    std::to_string(cells.size()));
    const std::string& name = cells.front();
    const auto graph = by_name.find(name);
    if (graph == by_name.end()) throw ParseError(line_no, "unknown molecule '" + name + "'");
    if (!seen.emplace(name).second) throw ParseError(line_no, "duplicate molecule '" + name + "'");

    Molecule m{name, *graph->second, {}};
    for (std::size_t i = 0; i < header.size(); ++i) {
      const std::string& cell = cells[i + 1];
      if (cell.empty()) continue;
      const auto value = parse_number(cell);
      if (!value) throw ParseError(line_no, "non-numeric value '" + cell + "' for " + header[i]);
      m.properties.emplace(header[i], *value);
    }
    records.push_back(std::move(m));
  }
  if (header.empty()) throw ParseError(line_no, "missing header row");
  return QsprDataset(std::move(records), std::move(header));
}

RegressionReport qspr_at_alpha(const QsprDataset& ds, std::string_view property, const Alpha& a) {
  const auto col = column(ds, property);
  const auto x = predictor(col, a);
  const auto fit = fit_linear(x, col.values);
  return {std::string(property), a, fit.r, fit.c1, fit.c2, fit.se, fit.f, fit.sf, fit.n};
}

std::vector<double> AlphaGrid::finite_points() const {
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi))
    throw ArgumentError("alpha grid needs finite lo <= hi and step > 0");
  const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> points;
  for (long long i = 0; i <= count; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (std::abs(v) < step / 2.0) continue;
    points.push_back(v);
  }
  return points;
}

AlphaGrid AlphaGrid::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) throw ArgumentError("alpha grid must be 'lo:step:hi'");
  const auto lo = parse_number(text.substr(0, first));
  const auto step = parse_number(text.substr(first + 1, second - first - 1));
  const auto hi = parse_number(text.substr(second + 1));
  if (!lo || !step || !hi) throw ArgumentError("alpha grid must be 'lo:step:hi' with numeric fields");
  AlphaGrid g{*lo, *hi, *step};
  g.finite_points();
  return g;
}

ScanResult alpha_scan(const QsprDataset& ds, std::string_view property, const AlphaGrid& grid, unsigned jobs) {
  const auto col = column(ds, property);

  std::vector<Alpha> alphas{Alpha::minus_inf(), Alpha::zero_limit(), Alpha::plus_inf()};
  for (const double v : grid.finite_points()) alphas.push_back(Alpha::finite(v));
  std::stable_sort(alphas.begin(), alphas.end(), [](const Alpha& a, const Alpha& b) { return a < b; });

  const auto samples = static_cast<Eigen::Index>(col.values.size());
  Eigen::MatrixXd xs(samples, static_cast<Eigen::Index>(alphas.size()));
  std::vector<double> rs(alphas.size());
  parallel_for(alphas.size(), jobs, [&](std::size_t j) {
    const auto x = predictor(col, alphas[j]);
    xs.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXd>(x.data(), samples);
    rs[j] = fit_linear(x, col.values).r;
  });

  for (Eigen::Index j = 0; j + 1 < xs.cols(); ++j) {
    const Eigen::ArrayXd drop = xs.col(j).array() - xs.col(j + 1).array();
    const Eigen::ArrayXd tol = 1e-12 * (1.0 + xs.col(j).array().abs());
    if ((drop > tol).any())
      throw IdentityViolation("mSO not monotone in alpha between " + to_string(alphas[static_cast<std::size_t>(j)]) +
                              " and " + to_string(alphas[static_cast<std::size_t>(j + 1)]));
  }

  // Ties in |r| go to the smaller |alpha|; ZeroLimit has |alpha| = 0.
  const auto better = [](double r_new, const Alpha& a_new, double r_old, const Alpha& a_old) {
    const double lhs = std::abs(r_new);
    const double rhs = std::abs(r_old);
    if (std::abs(lhs - rhs) > 1e-12 * std::max(lhs, rhs)) return lhs > rhs;
    const double mag_new = std::abs(a_new.order_key());
    const double mag_old = std::abs(a_old.order_key());
    if (mag_new != mag_old) return mag_new < mag_old;
    return a_new.kind() == Alpha::Kind::ZeroLimit && a_old.kind() != Alpha::Kind::ZeroLimit;
  };

  std::optional<std::size_t> best_grid;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (!alphas[j].is_finite()) continue;
    if (!best_grid || better(rs[j], alphas[j], rs[*best_grid], alphas[*best_grid])) best_grid = j;
  }

  std::vector<std::pair<Alpha, double>> candidates;
  if (best_grid) {
    const std::size_t j = *best_grid;
    const double lo = alphas[j > 0 && alphas[j - 1].is_finite() ? j - 1 : j].order_key();
    const double hi = alphas[j + 1 < alphas.size() && alphas[j + 1].is_finite() ? j + 1 : j].order_key();
    Alpha refined = alphas[j];
    double refined_r = rs[j];
    if (hi > lo) {
      const auto signed_r = [&](double v) { return fit_linear(predictor(col, Alpha::from_real(v)), col.values).r; };
      const auto [arg, abs_r] = golden_section_maximize([&](double v) { return std::abs(signed_r(v)); }, lo, hi, 1e-3);
      const Alpha candidate = Alpha::from_real(arg);
      const double candidate_r = signed_r(arg);
      if (better(candidate_r, candidate, refined_r, refined)) {
        refined = candidate;
        refined_r = candidate_r;
      }
    }
    candidates.emplace_back(refined, refined_r);
  }
  for (std::size_t j = 0; j < alphas.size(); ++j)
    if (!alphas[j].is_finite()) candidates.emplace_back(alphas[j], rs[j]);

  auto best = candidates.front();
  for (const auto& c : candidates)
    if (better(c.second, c.first, best.second, best.first)) best = c;

  ScanResult result{qspr_at_alpha(ds, property, best.first), {}};
  result.curve.reserve(alphas.size());
  for (std::size_t j = 0; j < alphas.size(); ++j) result.curve.push_back({alphas[j], rs[j]});
  return result;
}

void write_reports_csv(std::ostream& out, const std::vector<RegressionReport>& reports) {
  out << "property,alpha,r,c2,c1,SE,F,SF\n";
  for (const auto& r : reports)
    out << r.property << ',' << to_string(r.alpha) << ',' << format_number(r.r) << ',' << format_number(r.c2) << ','
        << format_number(r.c1) << ',' << format_number(r.se) << ',' << format_number(r.f) << ','
        << format_number(r.sf) << '\n';
}

void write_reports_json(std::ostream& out, const std::vector<RegressionReport>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json row;
    row["property"] = r.property;
    row["alpha"] = to_string(r.alpha);
    row["r"] = r.r;
    row["c2"] = r.c2;
    row["c1"] = r.c1;
    row["SE"] = r.se;
    // JSON has no infinity; a perfect fit reports F as null.
    row["F"] = std::isfinite(r.f) ? nlohmann::ordered_json(r.f) : nlohmann::ordered_json(nullptr);
    row["SF"] = r.sf;
    row["n"] = r.n;
    doc.push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve) {
  out << "alpha,r\n";
  for (const auto& p : curve) out << to_string(p.alpha) << ',' << format_number(p.r) << '\n';
}

}  // namespace msomb
