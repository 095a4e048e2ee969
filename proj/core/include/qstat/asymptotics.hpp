#pragma once

#include "qstat/ensemble.hpp"
#include "qstat/rational.hpp"

#include <cstdint>

namespace qstat {

/// Large-n limit of the occupancy-fraction posterior after a draw record:
/// a Beta law with integer parameters, so every moment stays rational and
/// the normalizer is a ratio of factorials rather than gamma numerics.
struct BetaPosterior {
  std::int64_t nu1 = 1;      // draws seen in the distinguished level, plus 1
  std::int64_t nu_rest = 1;  // draws seen elsewhere, plus (k - 1)

  friend bool operator==(const BetaPosterior&, const BetaPosterior&) = default;
};

// nu1 = N_1 + 1, nu_rest = sum_{j>=2} N_j + k - 1. Requires k >= 2 and a
// record covering all k levels.
BetaPosterior beta_from_record(std::int64_t k, const DrawRecord& record);

// f(R) = R^(nu1-1) (1-R)^(nu_rest-1) / B(nu1, nu_rest) on [0, 1], with the
// endpoint convention 0^0 = 1. Floating point appears only here and in
// deviation reporting; moments stay rational.
double beta_density(const BetaPosterior& bp, double r);

Rational beta_mean(const BetaPosterior& bp);

// E[R^order] = prod_{i=0}^{order-1} (nu1 + i) / (nu1 + nu_rest + i).
Rational beta_moment(const BetaPosterior& bp, std::int64_t order);

// Sup distance between the exact finite-n posterior and its Beta limit:
// max over support points R = m / (n - n') of
// |(n - n' + 1) * P_exact(m) - beta_density(R)|. The point masses are
// scaled by the number of support points, the natural histogram-to-density
// bridge. Bose-Einstein statistics; the record must leave at least one
// particle behind.
double finite_n_deviation(std::int64_t k, std::int64_t n,
                          const DrawRecord& record,
                          std::int64_t max_states = kDefaultStateCap);

}  // namespace qstat
