#pragma once

#include "qstat/ensemble.hpp"
#include "qstat/fock.hpp"
#include "qstat/rational.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qstat {

/// Deterministic generator with explicit bounded sampling. std::mt19937_64
/// and std::seed_seq are fully specified by the standard and the rejection
/// step below avoids std::uniform_int_distribution, so identical seeds give
/// identical streams on every platform. Worker substreams derive from
/// (seed, worker_index) and are reproducible regardless of scheduling.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : SplitRng(seed, 0) {}

  static SplitRng for_worker(std::uint64_t seed, std::uint64_t worker_index) {
    return SplitRng(seed, worker_index);
  }

  std::uint64_t next() { return engine_(); }

  // Unbiased uniform draw from [0, bound) via bitmask rejection.
  std::uint64_t below(std::uint64_t bound);
  BigInt below(const BigInt& bound);

 private:
  SplitRng(std::uint64_t seed, std::uint64_t worker_index);

  std::mt19937_64 engine_;
};

struct SimConfig {
  std::int64_t k = 2;
  std::int64_t n = 2;
  StatisticsKind stats = StatisticsKind::BoseEinstein;
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
};

// One equal-weight state preparation. Bose-Einstein and Fermi-Dirac draw a
// uniform support index and unrank it (never rejection); classical makes n
// independent uniform level choices and reduces them to an occupation vector.
OccupationVector sample_state(const SimConfig& cfg, SplitRng& rng);

// `draws` particles removed uniformly at random without replacement;
// returns the observed per-level counts.
DrawRecord sample_draws(const OccupationVector& state, std::int64_t draws,
                        SplitRng& rng);

inline constexpr double kWilsonZ99 = 2.5758293035489004;  // two-sided 99%

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

WilsonInterval wilson_interval(double proportion, std::int64_t trials,
                               double z = kWilsonZ99);
WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials,
                               double z = kWilsonZ99);

struct EmpiricalCell {
  std::int64_t remaining_count = 0;  // observed-level occupancy after draws
  Rational fraction;                 // remaining_count / (n - n')
  std::int64_t count = 0;
  double frequency = 0.0;
  WilsonInterval ci;  // Wilson 99% around the empirical frequency
};

struct EmpiricalDistribution {
  std::int64_t trials = 0;    // raw budget
  std::int64_t accepted = 0;  // trials whose draws matched the condition
  double acceptance_rate = 0.0;
  std::vector<EmpiricalCell> cells;  // ascending fraction
  double mean_fraction = 0.0;
  double mean_std_error = 0.0;

  // Count observed for a remaining-level occupancy, zero when never seen.
  std::int64_t count_for(std::int64_t remaining_count) const;
};

// Rejection sampling: run cfg.trials preparations, draw condition.total()
// particles from each, keep the trials whose record matches the condition
// exactly, and histogram the remaining fraction of `level`. The acceptance
// rate is reported so callers can size budgets. Throws NoAcceptedTrials when
// the condition never occurs. Deterministic in cfg.seed.
EmpiricalDistribution estimate_conditional(const SimConfig& cfg,
                                           const DrawRecord& condition,
                                           std::size_t level);

// Goodness-of-fit p-value of observed counts against exact cell
// probabilities (chi-square, dof = positive cells - 1).
double chi_square_pvalue(std::span<const std::int64_t> observed,
                         std::span<const double> expected_probabilities);

}  // namespace qstat
