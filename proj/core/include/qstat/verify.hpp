#pragma once

#include "qstat/montecarlo.hpp"
#include "qstat/rational.hpp"

#include <string>
#include <vector>

namespace qstat {

/// One exact-vs-empirical comparison inside a verify run. Probability
/// estimates are accepted when they fall inside the Wilson-99% interval
/// around the exact value; mean estimates use a 3-sigma band around the
/// empirical mean.
struct VerifyCheck {
  std::string label;
  Rational exact;
  double estimate = 0.0;
  double band_low = 0.0;
  double band_high = 1.0;
  std::int64_t accepted = 0;  // accepted trials behind the estimate
  bool pass = false;
};

struct VerifyReport {
  std::string scenario;
  std::vector<VerifyCheck> checks;

  bool all_pass() const;
};

// scenario is one of "coins", "crib", "daycare", "dice" or "all"; `trials`
// is the raw per-estimate budget. Deterministic in (scenario, trials, seed).
std::vector<VerifyReport> verify_scenarios(const std::string& scenario,
                                           std::int64_t trials,
                                           std::uint64_t seed);

bool all_reports_pass(const std::vector<VerifyReport>& reports);

}  // namespace qstat
