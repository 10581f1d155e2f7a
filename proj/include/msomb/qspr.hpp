#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "msomb/alpha.hpp"
#include "msomb/graph.hpp"

namespace msomb {

struct Molecule {
  std::string name;
  Graph graph;
  std::map<std::string, double> properties;  // missing cells are absent
};

/// Molecules joined with their measured properties. Units are whatever the
/// source CSV used; nothing is converted.
class QsprDataset {
public:
  static constexpr std::size_t kMinSamples = 3;

  QsprDataset(std::vector<Molecule> records, std::vector<std::string> property_names);

  const std::vector<Molecule>& records() const noexcept { return records_; }
  /// Property columns in header order.
  const std::vector<std::string>& property_names() const noexcept { return property_names_; }
  std::size_t sample_count(std::string_view property) const;
  /// At least kMinSamples records carry a value for the property.
  bool usable(std::string_view property) const;
  std::vector<std::string> usable_properties() const;

private:
  std::vector<Molecule> records_;
  std::vector<std::string> property_names_;
};

/// Joins named graphs with a properties CSV: header "name,<prop>,...", one
/// row per molecule, empty cell = missing. Throws ParseError (with line) for
/// unknown or duplicate molecule names, non-numeric cells and ragged rows.
QsprDataset load_dataset(const std::vector<NamedGraph>& graphs, std::string_view properties_csv);

struct RegressionReport {
  std::string property;
  Alpha alpha = Alpha::zero_limit();
  double r = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double se = 0.0;
  double f = 0.0;
  double sf = 0.0;
  std::size_t n = 0;
};

/// Regresses the property on mSO_alpha over the records that have it.
/// Throws ArgumentError for an unusable property.
RegressionReport qspr_at_alpha(const QsprDataset& ds, std::string_view property, const Alpha& a);

/// Finite grid lo, lo+step, ..., hi with the point 0 omitted; the scan adds
/// ZeroLimit and the two infinite tags itself.
struct AlphaGrid {
  double lo = -10.0;
  double hi = 10.0;
  double step = 0.01;

  std::vector<double> finite_points() const;
  /// "lo:step:hi".
  static AlphaGrid parse(std::string_view text);
};

struct CurvePoint {
  Alpha alpha;
  double r;
};

struct ScanResult {
  RegressionReport best;
  std::vector<CurvePoint> curve;  // grid points and tags, in extended order
};

/// Maximises |r| over the grid, refines the best finite point by
/// golden-section search to width 1e-3, then picks the best of
/// {refined, ZeroLimit, -inf, +inf}. Ties go to the smaller |alpha|, then
/// to ZeroLimit. Throws IdentityViolation if the predictor vectors fail to
/// be monotone in alpha across the grid.
ScanResult alpha_scan(const QsprDataset& ds, std::string_view property, const AlphaGrid& grid = {}, unsigned jobs = 0);

void write_reports_csv(std::ostream& out, const std::vector<RegressionReport>& reports);
void write_reports_json(std::ostream& out, const std::vector<RegressionReport>& reports);
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve);

}  // namespace msomb
