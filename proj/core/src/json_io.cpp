#include "qstat/json_io.hpp"

#include "qstat/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qstat {

using nlohmann::json;

json ensemble_to_json(const Ensemble& e) {
  json weights = json::array();
  for (const auto& [m, p] : e.weights()) {
    weights.push_back(
        {{"counts", std::vector<std::int64_t>(m.counts().begin(),
                                              m.counts().end())},
         {"p", to_fraction_string(p)}});
  }
  return {{"k", e.levels()},
          {"n", e.particles()},
          {"stats", std::string(to_string(e.statistics()))},
          {"weights", std::move(weights)}};
}

Ensemble ensemble_from_json(const json& j) {
  const auto k = j.at("k").get<std::int64_t>();
  const auto n = j.at("n").get<std::int64_t>();
  const StatisticsKind stats =
      statistics_from_string(j.at("stats").get<std::string>());
  Ensemble::WeightMap weights;
  for (const json& entry : j.at("weights")) {
    weights.emplace(
        OccupationVector(entry.at("counts").get<std::vector<std::int64_t>>()),
        parse_fraction(entry.at("p").get<std::string>()));
  }
  return Ensemble(k, n, stats, std::move(weights));
}

json empirical_to_json(const EmpiricalDistribution& d) {
  json cells = json::array();
  for (const EmpiricalCell& cell : d.cells) {
    cells.push_back({{"outcome", cell.remaining_count},
                     {"fraction", to_fraction_string(cell.fraction)},
                     {"count", cell.count},
                     {"freq", cell.frequency},
                     {"ci_low", cell.ci.low},
                     {"ci_high", cell.ci.high}});
  }
  return {{"trials", d.trials},
          {"accepted", d.accepted},
          {"acceptance_rate", d.acceptance_rate},
          {"mean_fraction", d.mean_fraction},
          {"mean_std_error", d.mean_std_error},
          {"cells", std::move(cells)}};
}

}  // namespace qstat
