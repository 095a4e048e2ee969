#pragma once

#include "qstat/ensemble.hpp"
#include "qstat/montecarlo.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace qstat {

inline constexpr std::string_view kSchemaTag = "qstat/1";

// Canonical ensemble object: {k, n, stats, weights: [{counts: [...],
// p: "num/den"}, ...]} with probabilities as exact fraction strings.
nlohmann::json ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const nlohmann::json& j);

// {outcome, count, freq, ci_low, ci_high} records plus run totals.
nlohmann::json empirical_to_json(const EmpiricalDistribution& d);

}  // namespace qstat
