#include "qstat/scenarios.hpp"

#include <stdexcept>
#include <utility>

namespace qstat {
namespace {

OccupationVector all_in_first_level(std::int64_t k, std::int64_t n) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
  counts[0] = n;
  return OccupationVector(std::move(counts));
}

}  // namespace

Rational all_same_state_probability(std::int64_t k, std::int64_t n,
                                    StatisticsKind stats) {
  if (k < 1) throw std::invalid_argument("level count must be at least 1");
  if (n < 0) throw std::invalid_argument("particle count must be non-negative");
  switch (stats) {
    case StatisticsKind::Classical:
      return Rational(1, integer_power(k, n));
    case StatisticsKind::BoseEinstein:
      return Rational(1, binomial(k + n - 1, n));
    case StatisticsKind::FermiDirac:
      // Pauli exclusion forbids the stacked vector outright for n > 1.
      return n > 1 ? Rational(0) : Rational(1, binomial(k + n - 1, n));
  }
  throw std::invalid_argument("unknown statistics kind");
}

Rational all_same_state_probability_via_ensemble(std::int64_t k,
                                                 std::int64_t n,
                                                 StatisticsKind stats,
                                                 std::int64_t max_states) {
  const Ensemble e = prepare_equal_weight(k, n, stats, max_states);
  return e.probability_of(all_in_first_level(k, n));
}

CribAnswers crib_answers(StatisticsKind stats) {
  const Ensemble crib = prepare_equal_weight(2, 2, stats);
  const OccupationVector both_boys({2, 0});
  const OccupationVector boy_left({1, 0});

  const DrawResult drawn = condition_on_draw(crib, 0);
  const Ensemble present = condition_on_presence(crib, 0, 1);
  return {drawn.posterior.probability_of(boy_left),
          present.probability_of(both_boys)};
}

CribAnswers crib_answers_closed_form(StatisticsKind stats) {
  switch (stats) {
    case StatisticsKind::Classical:
      return {Rational(1, 2), Rational(1, 3)};
    case StatisticsKind::BoseEinstein:
      return {Rational(2, 3), Rational(1, 2)};
    case StatisticsKind::FermiDirac:
      return {Rational(0), Rational(0)};
  }
  throw std::invalid_argument("unknown statistics kind");
}

std::vector<Rational> daycare_posterior_closed_form(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("daycare needs at least one child");
  std::vector<Rational> posterior;
  posterior.reserve(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m)
    posterior.emplace_back(2 * (m + 1), n * (n + 1));
  return posterior;
}

std::vector<Rational> daycare_posterior_via_pipeline(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("daycare needs at least one child");
  const Ensemble prior = prepare_equal_weight(2, n, StatisticsKind::BoseEinstein);
  const Ensemble posterior = condition_on_draw(prior, 0).posterior;
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m)
    out.push_back(posterior.probability_of(OccupationVector({m, n - 1 - m})));
  return out;
}

DicePosterior dice_posterior(std::int64_t k, std::int64_t n,
                             const DrawRecord& record,
                             std::int64_t max_states) {
  const Ensemble prior =
      prepare_equal_weight(k, n, StatisticsKind::BoseEinstein, max_states);
  const Ensemble posterior = condition_on_record(prior, record);
  return {fraction_distribution(posterior, 0), expectation_fraction(posterior, 0)};
}

}  // namespace qstat
