#include "msomb/indices.hpp"

#include <cmath>

#include "msomb/errors.hpp"

namespace msomb {

namespace {

void require(bool alpha_needed, bool beta_needed, std::string_view name, const IndexParams& p) {
  if (p.alpha.has_value() != alpha_needed || p.beta.has_value() != beta_needed) {
    std::string want = alpha_needed ? (beta_needed ? "alpha and beta" : "alpha only") : "no parameters";
    throw ArgumentError("index " + std::string(name) + " takes " + want);
  }
}

}  // namespace

double classical_index(const Graph& g, std::string_view name, const IndexParams& params) {
  if (name == "ISI") {
    require(false, false, name, params);
    return inverse_sum_indeg(g);
  }
  if (name == "RR" || name == "R-1" || name == "M2^1/2") {
    require(false, false, name, params);
    return reciprocal_randic(g);
  }
  if (name == "M1") {
    require(false, false, name, params);
    return first_zagreb(g);
  }
  if (name == "M1var") {
    require(true, false, name, params);
    return variable_first_zagreb(g, *params.alpha);
  }
  if (name == "SO") {
    require(false, false, name, params);
    return sombor(g);
  }
  if (name == "SOalpha") {
    require(true, false, name, params);
    if (*params.alpha == 0.0) throw ArgumentError("SOalpha needs a nonzero alpha");
    return alpha_sombor(g, *params.alpha);
  }
  if (name == "KA") {
    require(true, true, name, params);
    return ka_index(g, *params.alpha, *params.beta);
  }
  if (name == "SPmin") {
    require(false, false, name, params);
    return sp_min(g);
  }
  if (name == "SPmax") {
    require(false, false, name, params);
    return sp_max(g);
  }
  throw ArgumentError("unknown index '" + std::string(name) + "'");
}

std::vector<Specialization> specializations(const Graph& g) {
  const auto row = [&](Alpha a, std::string label, double classical) {
    return Specialization{a, std::move(label), mean_sombor(g, a), classical};
  };
  return {
      row(Alpha::minus_inf(), "SPmin", sp_min(g)),
      row(Alpha::finite(-1), "2*ISI", 2.0 * inverse_sum_indeg(g)),
      row(Alpha::zero_limit(), "R^-1", reciprocal_randic(g)),
      row(Alpha::finite(0.5), "2^-2*KA_{1/2,2}", 0.25 * ka_index(g, 0.5, 2.0)),
      row(Alpha::finite(1), "M1/2", 0.5 * first_zagreb(g)),
      row(Alpha::finite(2), "2^-1/2*SO", sombor(g) / std::sqrt(2.0)),
      row(Alpha::finite(3), "2^-1/3*KA_{3,1/3}", std::pow(2.0, -1.0 / 3.0) * ka_index(g, 3.0, 1.0 / 3.0)),
      row(Alpha::plus_inf(), "SPmax", sp_max(g)),
  };
}

}  // namespace msomb
