#include "qstat/montecarlo.hpp"

#include "qstat/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace qstat {

SplitRng::SplitRng(std::uint64_t seed, std::uint64_t worker_index) {
  // std::seed_seq mixing is fully specified, so substreams are portable.
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(worker_index),
      static_cast<std::uint32_t>(worker_index >> 32)};
  engine_.seed(seq);
}

std::uint64_t SplitRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  if (bound == 1) return 0;
  const std::uint64_t mask =
      std::numeric_limits<std::uint64_t>::max() >> std::countl_zero(bound - 1);
  for (;;) {
    const std::uint64_t v = next() & mask;
    if (v < bound) return v;
  }
}

BigInt SplitRng::below(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  if (bound <= std::numeric_limits<std::uint64_t>::max())
    return BigInt(below(bound.convert_to<std::uint64_t>()));

  const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
  const unsigned words = (bits + 63) / 64;
  for (;;) {
    BigInt v = 0;
    for (unsigned w = 0; w < words; ++w) {
      v <<= 64;
      v |= BigInt(next());
    }
    v >>= words * 64 - bits;
    if (v < bound) return v;
  }
}

OccupationVector sample_state(const SimConfig& cfg, SplitRng& rng) {
  if (cfg.k < 1) throw std::invalid_argument("level count must be at least 1");
  if (cfg.n < 0) throw std::invalid_argument("negative particle count");

  if (cfg.stats == StatisticsKind::Classical) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(cfg.k), 0);
    for (std::int64_t i = 0; i < cfg.n; ++i)
      ++counts[rng.below(static_cast<std::uint64_t>(cfg.k))];
    return OccupationVector(std::move(counts));
  }
  const BigInt index = rng.below(state_count(cfg.k, cfg.n, cfg.stats));
  return unrank_support(cfg.k, cfg.n, cfg.stats, index);
}

DrawRecord sample_draws(const OccupationVector& state, std::int64_t draws,
                        SplitRng& rng) {
  if (draws < 0 || draws > state.total())
    throw std::invalid_argument("cannot draw more particles than present");

  std::vector<std::int64_t> pool(state.counts().begin(), state.counts().end());
  std::vector<std::int64_t> seen(pool.size(), 0);
  std::int64_t remaining = state.total();
  for (std::int64_t d = 0; d < draws; ++d) {
    std::int64_t pick =
        static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(remaining)));
    std::size_t level = 0;
    while (pick >= pool[level]) pick -= pool[level++];
    --pool[level];
    ++seen[level];
    --remaining;
  }
  return DrawRecord(std::move(seen));
}

WilsonInterval wilson_interval(double proportion, std::int64_t trials,
                               double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double nt = static_cast<double>(trials);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double centre = proportion + z2 / (2.0 * nt);
  const double half =
      z * std::sqrt(proportion * (1.0 - proportion) / nt + z2 / (4.0 * nt * nt));
  return {std::max(0.0, (centre - half) / denom),
          std::min(1.0, (centre + half) / denom)};
}

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials,
                               double z) {
  if (trials <= 0) return {0.0, 1.0};
  return wilson_interval(static_cast<double>(successes) / trials, trials, z);
}

std::int64_t EmpiricalDistribution::count_for(
    std::int64_t remaining_count) const {
  for (const EmpiricalCell& cell : cells)
    if (cell.remaining_count == remaining_count) return cell.count;
  return 0;
}

EmpiricalDistribution estimate_conditional(const SimConfig& cfg,
                                           const DrawRecord& condition,
                                           std::size_t level) {
  if (cfg.trials < 1) throw std::invalid_argument("trial budget must be >= 1");
  if (condition.levels() != static_cast<std::size_t>(cfg.k))
    throw std::invalid_argument("condition must cover every level");
  if (condition.total() >= cfg.n)
    throw std::invalid_argument("condition must leave particles to observe");
  if (level >= static_cast<std::size_t>(cfg.k))
    throw std::invalid_argument("level index out of range");

  SplitRng rng(cfg.seed);
  const std::int64_t remaining = cfg.n - condition.total();
  std::map<std::int64_t, std::int64_t> histogram;
  std::int64_t accepted = 0;
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    const OccupationVector state = sample_state(cfg, rng);
    const DrawRecord seen = sample_draws(state, condition.total(), rng);
    if (!(seen == condition)) continue;
    ++accepted;
    ++histogram[state.count(level) - condition.count(level)];
  }
  if (accepted == 0)
    throw NoAcceptedTrials("condition never occurred in " +
                           std::to_string(cfg.trials) + " trials");

  EmpiricalDistribution out;
  out.trials = cfg.trials;
  out.accepted = accepted;
  out.acceptance_rate = static_cast<double>(accepted) / cfg.trials;

  double mean = 0.0;
  for (const auto& [m, count] : histogram) {
    EmpiricalCell cell;
    cell.remaining_count = m;
    cell.fraction = Rational(m, remaining);
    cell.count = count;
    cell.frequency = static_cast<double>(count) / accepted;
    cell.ci = wilson_interval(count, accepted);
    mean += cell.frequency * to_double(cell.fraction);
    out.cells.push_back(std::move(cell));
  }
  out.mean_fraction = mean;

  double variance = 0.0;
  for (const EmpiricalCell& cell : out.cells) {
    const double diff = to_double(cell.fraction) - mean;
    variance += diff * diff * cell.count;
  }
  if (accepted > 1) {
    variance /= static_cast<double>(accepted - 1);
    out.mean_std_error = std::sqrt(variance / accepted);
  }
  return out;
}

double chi_square_pvalue(std::span<const std::int64_t> observed,
                         std::span<const double> expected_probabilities) {
  if (observed.size() != expected_probabilities.size())
    throw std::invalid_argument("observed/expected size mismatch");

  std::int64_t total = 0;
  for (const std::int64_t c : observed) total += c;
  if (total <= 0) throw std::invalid_argument("no observations");

  double statistic = 0.0;
  std::int64_t cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double p = expected_probabilities[i];
    if (p <= 0.0) {
      if (observed[i] > 0) return 0.0;  // impossible cell observed
      continue;
    }
    const double expected = p * static_cast<double>(total);
    const double diff = static_cast<double>(observed[i]) - expected;
    statistic += diff * diff / expected;
    ++cells;
  }
  if (cells < 2) return 1.0;
  const double dof = static_cast<double>(cells - 1);
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

}  // namespace qstat
