#include "qstat/verify.hpp"

#include "qstat/scenarios.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qstat {
namespace {

std::uint64_t subrun_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitRng::for_worker(seed, index).next();
}

VerifyCheck wilson_check(std::string label, Rational exact, double estimate,
                         std::int64_t accepted) {
  // Band: Wilson-99% interval around the exact probability.
  const WilsonInterval band = wilson_interval(to_double(exact), accepted);
  VerifyCheck check;
  check.label = std::move(label);
  check.exact = std::move(exact);
  check.estimate = estimate;
  check.band_low = band.low;
  check.band_high = band.high;
  check.accepted = accepted;
  check.pass = estimate >= band.low && estimate <= band.high;
  return check;
}

VerifyCheck mean_check(std::string label, Rational exact,
                       const EmpiricalDistribution& emp) {
  // Band: 3-sigma envelope around the empirical mean.
  VerifyCheck check;
  check.label = std::move(label);
  check.exact = std::move(exact);
  check.estimate = emp.mean_fraction;
  check.band_low = emp.mean_fraction - 3.0 * emp.mean_std_error;
  check.band_high = emp.mean_fraction + 3.0 * emp.mean_std_error;
  check.accepted = emp.accepted;
  const double target = to_double(check.exact);
  check.pass = target >= check.band_low && target <= check.band_high;
  return check;
}

double cell_frequency(const EmpiricalDistribution& emp, std::int64_t m) {
  return static_cast<double>(emp.count_for(m)) / emp.accepted;
}

constexpr StatisticsKind kAllStats[] = {StatisticsKind::Classical,
                                        StatisticsKind::BoseEinstein,
                                        StatisticsKind::FermiDirac};

VerifyReport verify_coins(std::int64_t trials, std::uint64_t seed) {
  VerifyReport report{"coins", {}};
  std::uint64_t sub = 0;
  for (const StatisticsKind stats : kAllStats) {
    SimConfig cfg{2, 2, stats, trials, subrun_seed(seed, sub++)};
    SplitRng rng(cfg.seed);
    std::int64_t stacked = 0;
    for (std::int64_t t = 0; t < trials; ++t)
      stacked += sample_state(cfg, rng).count(0) == cfg.n ? 1 : 0;
    report.checks.push_back(wilson_check(
        "coins/" + std::string(to_string(stats)) + "/all-level-1",
        all_same_state_probability(2, 2, stats),
        static_cast<double>(stacked) / trials, trials));
  }
  return report;
}

VerifyReport verify_crib(std::int64_t trials, std::uint64_t seed) {
  VerifyReport report{"crib", {}};
  std::uint64_t sub = 100;
  for (const StatisticsKind stats : kAllStats) {
    const CribAnswers exact = crib_answers(stats);
    const std::string tag(to_string(stats));

    // Question I: reject trials whose single draw is not a boy.
    SimConfig cfg{2, 2, stats, trials, subrun_seed(seed, sub++)};
    const EmpiricalDistribution emp =
        estimate_conditional(cfg, DrawRecord({1, 0}), 0);
    report.checks.push_back(wilson_check("crib/" + tag + "/question-I",
                                         exact.after_draw,
                                         cell_frequency(emp, 1), emp.accepted));

    // Question II: reject prepared states without a boy.
    SplitRng rng(subrun_seed(seed, sub++));
    std::int64_t with_boy = 0;
    std::int64_t both_boys = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      const OccupationVector state = sample_state(cfg, rng);
      if (state.count(0) < 1) continue;
      ++with_boy;
      both_boys += state.count(0) == 2 ? 1 : 0;
    }
    report.checks.push_back(wilson_check(
        "crib/" + tag + "/question-II", exact.given_presence,
        static_cast<double>(both_boys) / with_boy, with_boy));
  }
  return report;
}

VerifyReport verify_daycare(std::int64_t trials, std::uint64_t seed) {
  constexpr std::int64_t n = 30;
  VerifyReport report{"daycare", {}};
  SimConfig cfg{2, n, StatisticsKind::BoseEinstein, trials,
                subrun_seed(seed, 200)};
  const EmpiricalDistribution emp =
      estimate_conditional(cfg, DrawRecord({1, 0}), 0);
  const std::vector<Rational> exact = daycare_posterior_closed_form(n);
  for (const std::int64_t m : {std::int64_t(0), std::int64_t(7),
                               std::int64_t(15), std::int64_t(22),
                               std::int64_t(29)}) {
    report.checks.push_back(wilson_check(
        "daycare/boys-left-" + std::to_string(m),
        exact[static_cast<std::size_t>(m)], cell_frequency(emp, m),
        emp.accepted));
  }
  report.checks.push_back(
      mean_check("daycare/mean-fraction", Rational(2, 3), emp));
  return report;
}

VerifyReport verify_dice(std::int64_t trials, std::uint64_t seed) {
  constexpr std::int64_t n = 30;
  VerifyReport report{"dice", {}};
  SimConfig cfg{3, n, StatisticsKind::BoseEinstein, trials,
                subrun_seed(seed, 300)};
  const DrawRecord record({1, 0, 0});
  const EmpiricalDistribution emp = estimate_conditional(cfg, record, 0);
  const DicePosterior exact = dice_posterior(3, n, record);

  const std::int64_t remaining = n - record.total();
  auto exact_probability = [&](std::int64_t m) {
    const Rational fraction(m, remaining);
    const auto it = std::find_if(
        exact.distribution.begin(), exact.distribution.end(),
        [&](const FractionPoint& pt) { return pt.fraction == fraction; });
    return it == exact.distribution.end() ? Rational(0) : it->probability;
  };
  for (const std::int64_t m :
       {std::int64_t(5), std::int64_t(14), std::int64_t(24)}) {
    report.checks.push_back(
        wilson_check("dice/level-1-count-" + std::to_string(m),
                     exact_probability(m), cell_frequency(emp, m),
                     emp.accepted));
  }
  report.checks.push_back(mean_check("dice/mean-fraction", exact.mean, emp));
  return report;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

bool all_reports_pass(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerifyReport& r) { return r.all_pass(); });
}

std::vector<VerifyReport> verify_scenarios(const std::string& scenario,
                                           std::int64_t trials,
                                           std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trial budget must be >= 1");
  std::vector<VerifyReport> reports;
  const bool all = scenario == "all";
  if (all || scenario == "coins") reports.push_back(verify_coins(trials, seed));
  if (all || scenario == "crib") reports.push_back(verify_crib(trials, seed));
  if (all || scenario == "daycare")
    reports.push_back(verify_daycare(trials, seed));
  if (all || scenario == "dice") reports.push_back(verify_dice(trials, seed));
  if (reports.empty())
    throw std::invalid_argument("unknown scenario: " + scenario);
  return reports;
}

}  // namespace qstat
