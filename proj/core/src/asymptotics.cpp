#include "qstat/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace qstat {
namespace {

void check_parameters(const BetaPosterior& bp) {
  if (bp.nu1 < 1 || bp.nu_rest < 1)
    throw std::invalid_argument("Beta parameters must be positive integers");
}

// B(a, b) = (a-1)! (b-1)! / (a+b-1)! for integer parameters; exact, so no
// gamma-function numerics enter the density.
Rational beta_function(std::int64_t a, std::int64_t b) {
  return Rational(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1));
}

}  // namespace

BetaPosterior beta_from_record(std::int64_t k, const DrawRecord& record) {
  if (k < 2)
    throw std::invalid_argument("the fraction law needs at least two levels");
  if (record.levels() != static_cast<std::size_t>(k))
    throw std::invalid_argument("draw record must cover every level");
  return {record[0] + 1, (record.total() - record[0]) + k - 1};
}

double beta_density(const BetaPosterior& bp, double r) {
  check_parameters(bp);
  if (!(r >= 0.0 && r <= 1.0))
    throw std::invalid_argument("fraction must lie in [0, 1]");
  // std::pow(0, 0) == 1 gives the endpoint-by-continuity convention.
  const double shape = std::pow(r, static_cast<double>(bp.nu1 - 1)) *
                       std::pow(1.0 - r, static_cast<double>(bp.nu_rest - 1));
  return shape / to_double(beta_function(bp.nu1, bp.nu_rest));
}

Rational beta_mean(const BetaPosterior& bp) {
  check_parameters(bp);
  return Rational(bp.nu1, bp.nu1 + bp.nu_rest);
}

Rational beta_moment(const BetaPosterior& bp, std::int64_t order) {
  check_parameters(bp);
  if (order < 1) throw std::invalid_argument("moment order must be >= 1");
  Rational acc = 1;
  for (std::int64_t i = 0; i < order; ++i)
    acc *= Rational(bp.nu1 + i, bp.nu1 + bp.nu_rest + i);
  return acc;
}

double finite_n_deviation(std::int64_t k, std::int64_t n,
                          const DrawRecord& record, std::int64_t max_states) {
  const BetaPosterior bp = beta_from_record(k, record);
  const Ensemble prior =
      prepare_equal_weight(k, n, StatisticsKind::BoseEinstein, max_states);
  const Ensemble posterior = condition_on_record(prior, record);
  if (posterior.particles() < 1)
    throw std::invalid_argument("record leaves no particles to compare");

  // Scaling each point mass by the number of support points turns the exact
  // histogram into a density comparable against the limit law.
  const Rational scale(posterior.particles() + 1);
  double worst = 0.0;
  for (const FractionPoint& pt : fraction_distribution(posterior, 0)) {
    const double mass = to_double(scale * pt.probability);
    const double density = beta_density(bp, to_double(pt.fraction));
    worst = std::max(worst, std::abs(mass - density));
  }
  return worst;
}

}  // namespace qstat
