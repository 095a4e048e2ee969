#pragma once

#include "qstat/ensemble.hpp"

#include <vector>

namespace qstat {

// Named scenarios, each available through a closed form and through the
// generic ensemble machinery. The duplication is deliberate: the two routes
// serve as mutual oracles and are cross-checked by the test suite.

// Chance that all n particles sit in one designated level.
Rational all_same_state_probability(std::int64_t k, std::int64_t n,
                                    StatisticsKind stats);
// Same quantity read off the prepared ensemble.
Rational all_same_state_probability_via_ensemble(
    std::int64_t k, std::int64_t n, StatisticsKind stats,
    std::int64_t max_states = kDefaultStateCap);

struct CribAnswers {
  // Question I: one of two children is drawn and is a boy; chance the other
  // is a boy too.
  Rational after_draw;
  // Question II: at least one of the two is a boy; chance both are.
  Rational given_presence;

  friend bool operator==(const CribAnswers&, const CribAnswers&) = default;
};

CribAnswers crib_answers(StatisticsKind stats);              // conditioning pipeline
CribAnswers crib_answers_closed_form(StatisticsKind stats);  // textbook constants

// P(m boys remain | a random draw from n children showed a boy) for the
// two-level equal-weight Bose-Einstein ensemble: 2(m+1) / (n(n+1)),
// m = 0..n-1. Defined for n = 1 as the point mass on m = 0.
std::vector<Rational> daycare_posterior_closed_form(std::int64_t n);
std::vector<Rational> daycare_posterior_via_pipeline(std::int64_t n);

struct DicePosterior {
  std::vector<FractionPoint> distribution;  // fraction of remaining dice in level 1
  Rational mean;
};

// Exact finite-n posterior for Bose-Einstein dice after a draw record.
DicePosterior dice_posterior(std::int64_t k, std::int64_t n,
                             const DrawRecord& record,
                             std::int64_t max_states = kDefaultStateCap);

}  // namespace qstat
