#include "qstat/ensemble.hpp"

#include "qstat/errors.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qstat {
namespace {

void check_level(const Ensemble& e, std::size_t level) {
  if (level >= static_cast<std::size_t>(e.levels()))
    throw std::invalid_argument("level index out of range");
}

OccupationVector subtract_record(const OccupationVector& m,
                                 const DrawRecord& record) {
  std::vector<std::int64_t> counts(m.counts().begin(), m.counts().end());
  for (std::size_t j = 0; j < counts.size(); ++j) counts[j] -= record[j];
  return OccupationVector(std::move(counts));
}

}  // namespace

DrawRecord::DrawRecord(std::vector<std::int64_t> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty())
    throw std::invalid_argument("draw record needs at least one level");
  for (const std::int64_t c : counts_) {
    if (c < 0) throw std::invalid_argument("draw counts must be >= 0");
    total_ += c;
  }
}

Ensemble::Ensemble(std::int64_t k, std::int64_t n, StatisticsKind stats,
                   WeightMap weights)
    : k_(k), n_(n), stats_(stats), weights_(std::move(weights)) {
  if (k_ < 1) throw std::invalid_argument("ensemble needs at least one level");
  if (n_ < 0) throw std::invalid_argument("negative particle number");
  if (weights_.empty())
    throw std::invalid_argument("ensemble needs a non-empty support");
  Rational sum;
  for (const auto& [m, p] : weights_) {
    if (m.levels() != static_cast<std::size_t>(k_))
      throw std::invalid_argument("support vector has the wrong level count");
    if (m.total() != n_)
      throw std::invalid_argument("support vector has the wrong particle count");
    if (p <= 0) throw std::invalid_argument("ensemble weights must be positive");
    if (stats_ == StatisticsKind::FermiDirac && m.max_count() > 1)
      throw std::invalid_argument("Fermi-Dirac support breaks the Pauli bound");
    sum += p;
  }
  if (sum != 1)
    throw std::invalid_argument("ensemble weights must sum to exactly 1");
}

Rational Ensemble::probability_of(const OccupationVector& m) const {
  const auto it = weights_.find(m);
  return it == weights_.end() ? Rational(0) : it->second;
}

Ensemble prepare_equal_weight(std::int64_t k, std::int64_t n,
                              StatisticsKind stats, std::int64_t max_states) {
  auto support = enumerate_support(k, n, stats, max_states);
  Ensemble::WeightMap weights;
  if (stats == StatisticsKind::Classical) {
    for (auto& m : support) {
      auto w = multinomial_weight(m);
      weights.emplace_hint(weights.end(), std::move(m), std::move(w));
    }
  } else {
    const Rational uniform(1, state_count(k, n, stats));
    for (auto& m : support)
      weights.emplace_hint(weights.end(), std::move(m), uniform);
  }
  return Ensemble(k, n, stats, std::move(weights));
}

Ensemble condition_on_presence(const Ensemble& e, std::size_t level,
                               std::int64_t minimum) {
  check_level(e, level);
  if (minimum < 1)
    throw std::invalid_argument("presence minimum must be at least 1");

  Ensemble::WeightMap kept;
  Rational mass;
  for (const auto& [m, p] : e.weights()) {
    if (m[level] < minimum) continue;
    kept.emplace_hint(kept.end(), m, p);
    mass += p;
  }
  if (kept.empty())
    throw EmptyConditioning("no support vector holds " +
                            std::to_string(minimum) + " or more in level " +
                            std::to_string(level + 1));
  for (auto& [m, p] : kept) p /= mass;
  return Ensemble(e.levels(), e.particles(), e.statistics(), std::move(kept));
}

DrawResult condition_on_draw(const Ensemble& e, std::size_t level) {
  check_level(e, level);
  if (e.particles() < 1)
    throw std::invalid_argument("cannot draw from an empty ensemble");

  Ensemble::WeightMap posterior;
  Rational mass;  // sum of count(level) * P(m)
  for (const auto& [m, p] : e.weights()) {
    const std::int64_t c = m[level];
    if (c == 0) continue;
    Rational contribution = p * c;
    mass += contribution;
    posterior.emplace_hint(posterior.end(), m.with_decrement(level),
                           std::move(contribution));
  }
  if (mass == 0)
    throw ZeroProbabilityDraw("no support vector occupies level " +
                              std::to_string(level + 1));
  for (auto& [m, p] : posterior) p /= mass;
  return {Ensemble(e.levels(), e.particles() - 1, e.statistics(),
                   std::move(posterior)),
          mass / e.particles()};
}

Ensemble condition_on_record(const Ensemble& e, const DrawRecord& record) {
  if (record.levels() != static_cast<std::size_t>(e.levels()))
    throw std::invalid_argument("draw record must cover every level");
  if (record.total() > e.particles())
    throw std::invalid_argument("record draws more particles than present");

  Ensemble::WeightMap posterior;
  Rational mass;
  for (const auto& [m, p] : e.weights()) {
    BigInt orderings = 1;  // per-level falling factorials
    for (std::size_t j = 0; j < record.levels() && orderings != 0; ++j)
      orderings *= falling_factorial(m[j], record[j]);
    if (orderings == 0) continue;
    Rational contribution = p * Rational(orderings);
    mass += contribution;
    posterior.emplace_hint(posterior.end(), subtract_record(m, record),
                           std::move(contribution));
  }
  if (posterior.empty())
    throw ZeroProbabilityDraw(
        "the draw record has probability zero under this ensemble");
  for (auto& [m, p] : posterior) p /= mass;
  return Ensemble(e.levels(), e.particles() - record.total(), e.statistics(),
                  std::move(posterior));
}

std::vector<FractionPoint> fraction_distribution(const Ensemble& e,
                                                 std::size_t level) {
  check_level(e, level);
  if (e.particles() < 1)
    throw std::invalid_argument("occupancy fraction of an empty system");

  std::map<Rational, Rational> grouped;  // ascending fraction
  for (const auto& [m, p] : e.weights())
    grouped[Rational(m[level], e.particles())] += p;

  std::vector<FractionPoint> out;
  out.reserve(grouped.size());
  for (auto& [fraction, probability] : grouped)
    out.push_back({fraction, std::move(probability)});
  return out;
}

Rational expectation_fraction(const Ensemble& e, std::size_t level) {
  check_level(e, level);
  if (e.particles() < 1)
    throw std::invalid_argument("occupancy fraction of an empty system");

  Rational acc;
  for (const auto& [m, p] : e.weights()) acc += p * m[level];
  return acc / e.particles();
}

}  // namespace qstat
