#pragma once

#include "qstat/fock.hpp"
#include "qstat/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace qstat {

/// Multiset of observed levels over a run of sequential random draws.
class DrawRecord {
 public:
  DrawRecord() = default;
  explicit DrawRecord(std::vector<std::int64_t> counts);

  std::size_t levels() const { return counts_.size(); }
  std::int64_t total() const { return total_; }
  std::int64_t count(std::size_t level) const { return counts_.at(level); }
  std::int64_t operator[](std::size_t level) const { return counts_[level]; }
  std::span<const std::int64_t> counts() const { return counts_; }

  friend bool operator==(const DrawRecord&, const DrawRecord&) = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

/// Exact rational probability distribution over occupation vectors: the
/// diagonal mixed state of n identical particles in k levels. Immutable;
/// every conditioning operation returns a fresh ensemble, so instances are
/// safe to share across threads.
///
/// Invariants enforced at construction: every key has length k and total n,
/// all weights are positive, the weights sum to exactly 1, and Fermi-Dirac
/// ensembles never put two particles in one level.
class Ensemble {
 public:
  using WeightMap = std::map<OccupationVector, Rational, DescendingCountOrder>;

  Ensemble(std::int64_t k, std::int64_t n, StatisticsKind stats,
           WeightMap weights);

  std::int64_t levels() const { return k_; }
  std::int64_t particles() const { return n_; }
  StatisticsKind statistics() const { return stats_; }
  const WeightMap& weights() const { return weights_; }
  std::size_t support_size() const { return weights_.size(); }

  // Zero when the vector is outside the support.
  Rational probability_of(const OccupationVector& m) const;

  friend bool operator==(const Ensemble&, const Ensemble&) = default;

 private:
  std::int64_t k_ = 0;
  std::int64_t n_ = 0;
  StatisticsKind stats_ = StatisticsKind::Classical;
  WeightMap weights_;
};

// The a-priori equal-weight mixed state: uniform weight on every allowed
// vector for Bose-Einstein and Fermi-Dirac, multinomial weights for
// classical (distinguishable) particles.
Ensemble prepare_equal_weight(std::int64_t k, std::int64_t n,
                              StatisticsKind stats,
                              std::int64_t max_states = kDefaultStateCap);

// Keep only support vectors with count(level) >= minimum and renormalize.
// The particle number is unchanged. Throws EmptyConditioning when nothing
// survives (e.g. Fermi-Dirac with minimum = 2).
Ensemble condition_on_presence(const Ensemble& e, std::size_t level,
                               std::int64_t minimum = 1);

struct DrawResult {
  Ensemble posterior;         // one particle fewer
  Rational draw_probability;  // marginal chance the draw shows `level`
};

// Bayes update after one particle is drawn uniformly at random and observed
// in `level`: posterior weight on m minus one particle in `level` is
// proportional to count(level) * P(m). Throws ZeroProbabilityDraw when the
// observation has probability zero.
DrawResult condition_on_draw(const Ensemble& e, std::size_t level);

// Condition on a whole draw record at once. Equal to chaining
// condition_on_draw over the drawn particles in any order; the weight picked
// up by each support vector is the per-level falling factorial
// prod_j count_j * (count_j - 1) * ... * (count_j - N_j + 1).
Ensemble condition_on_record(const Ensemble& e, const DrawRecord& record);

struct FractionPoint {
  Rational fraction;  // level occupancy over the particle number
  Rational probability;

  friend bool operator==(const FractionPoint&, const FractionPoint&) = default;
};

// Distribution of the occupancy fraction of `level`, ascending in fraction.
std::vector<FractionPoint> fraction_distribution(const Ensemble& e,
                                                 std::size_t level);

Rational expectation_fraction(const Ensemble& e, std::size_t level);

}  // namespace qstat
