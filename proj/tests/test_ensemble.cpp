#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qstat/ensemble.hpp"
#include "qstat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace qstat;

namespace {

constexpr StatisticsKind kAllStats[] = {StatisticsKind::Classical,
                                        StatisticsKind::BoseEinstein,
                                        StatisticsKind::FermiDirac};

Rational weight_sum(const Ensemble& e) {
  Rational sum;
  for (const auto& [m, p] : e.weights()) sum += p;
  return sum;
}

OccupationVector permuted(const OccupationVector& m,
                          const std::vector<std::size_t>& perm) {
  std::vector<std::int64_t> counts(m.levels());
  for (std::size_t j = 0; j < perm.size(); ++j) counts[perm[j]] = m[j];
  return OccupationVector(std::move(counts));
}

Ensemble permuted(const Ensemble& e, const std::vector<std::size_t>& perm) {
  Ensemble::WeightMap weights;
  for (const auto& [m, p] : e.weights()) weights.emplace(permuted(m, perm), p);
  return Ensemble(e.levels(), e.particles(), e.statistics(),
                  std::move(weights));
}

// Expand a record into single-level draws, in shuffled order.
std::vector<std::size_t> shuffled_draw_sequence(const DrawRecord& record,
                                                std::mt19937_64& gen) {
  std::vector<std::size_t> sequence;
  for (std::size_t j = 0; j < record.levels(); ++j)
    sequence.insert(sequence.end(), static_cast<std::size_t>(record[j]), j);
  std::shuffle(sequence.begin(), sequence.end(), gen);
  return sequence;
}

}  // namespace

TEST_CASE("equal-weight preparation matches the three statistics") {
  const Ensemble be = prepare_equal_weight(2, 2, StatisticsKind::BoseEinstein);
  CHECK(be.probability_of(OccupationVector({2, 0})) == Rational(1, 3));
  CHECK(be.probability_of(OccupationVector({1, 1})) == Rational(1, 3));
  CHECK(be.probability_of(OccupationVector({0, 2})) == Rational(1, 3));

  const Ensemble cl = prepare_equal_weight(2, 2, StatisticsKind::Classical);
  CHECK(cl.probability_of(OccupationVector({2, 0})) == Rational(1, 4));
  CHECK(cl.probability_of(OccupationVector({1, 1})) == Rational(1, 2));
  CHECK(cl.probability_of(OccupationVector({0, 2})) == Rational(1, 4));

  SUBCASE("two-level boson ensembles are flat over n+1 vectors") {
    for (std::int64_t n = 1; n <= 24; ++n) {
      const Ensemble e = prepare_equal_weight(2, n, StatisticsKind::BoseEinstein);
      CHECK(e.support_size() == static_cast<std::size_t>(n + 1));
      for (const auto& [m, p] : e.weights()) CHECK(p == Rational(1, n + 1));
    }
  }
}

TEST_CASE("presence conditioning renormalizes the surviving subspace") {
  const Ensemble be = prepare_equal_weight(2, 2, StatisticsKind::BoseEinstein);
  const Ensemble be_with_boy = condition_on_presence(be, 0, 1);
  CHECK(be_with_boy.probability_of(OccupationVector({2, 0})) == Rational(1, 2));
  CHECK(be_with_boy.probability_of(OccupationVector({1, 1})) == Rational(1, 2));
  CHECK(be_with_boy.particles() == 2);

  const Ensemble cl = prepare_equal_weight(2, 2, StatisticsKind::Classical);
  const Ensemble cl_with_boy = condition_on_presence(cl, 0, 1);
  CHECK(cl_with_boy.probability_of(OccupationVector({2, 0})) == Rational(1, 3));
  CHECK(cl_with_boy.probability_of(OccupationVector({1, 1})) == Rational(2, 3));

  const Ensemble fd = prepare_equal_weight(2, 2, StatisticsKind::FermiDirac);
  CHECK_THROWS_AS(condition_on_presence(fd, 0, 2), EmptyConditioning);
}

TEST_CASE("draw conditioning reweights by occupancy") {
  SUBCASE("boson crib") {
    const Ensemble be = prepare_equal_weight(2, 2, StatisticsKind::BoseEinstein);
    const DrawResult drawn = condition_on_draw(be, 0);
    CHECK(drawn.draw_probability == Rational(1, 2));
    CHECK(drawn.posterior.probability_of(OccupationVector({1, 0})) ==
          Rational(2, 3));
    CHECK(drawn.posterior.probability_of(OccupationVector({0, 1})) ==
          Rational(1, 3));
  }
  SUBCASE("classical crib stays independent") {
    const Ensemble cl = prepare_equal_weight(2, 2, StatisticsKind::Classical);
    const DrawResult drawn = condition_on_draw(cl, 0);
    CHECK(drawn.posterior.probability_of(OccupationVector({1, 0})) ==
          Rational(1, 2));
    CHECK(drawn.posterior.probability_of(OccupationVector({0, 1})) ==
          Rational(1, 2));
  }
  SUBCASE("fermion crib forbids a second boy") {
    const Ensemble fd = prepare_equal_weight(2, 2, StatisticsKind::FermiDirac);
    const DrawResult drawn = condition_on_draw(fd, 0);
    CHECK(drawn.posterior.probability_of(OccupationVector({0, 1})) == 1);
    CHECK(drawn.posterior.probability_of(OccupationVector({1, 0})) == 0);
  }
  SUBCASE("drawing from a never-occupied level is an error") {
    Ensemble::WeightMap weights;
    weights.emplace(OccupationVector({0, 2}), Rational(1));
    const Ensemble e(2, 2, StatisticsKind::BoseEinstein, std::move(weights));
    CHECK_THROWS_AS(condition_on_draw(e, 0), ZeroProbabilityDraw);
  }
}

TEST_CASE("record conditioning matches the hand-computed three-boson case") {
  // Independent derivation: uniform prior 1/4 on the count in level 1 over
  // {0,1,2,3}; drawing one from level 1 reweights by that count; decrement.
  std::vector<Rational> expected(3);
  {
    std::vector<Rational> prior(4, Rational(1, 4));
    Rational mass;
    for (std::int64_t c = 0; c <= 3; ++c) mass += prior[c] * c;
    for (std::int64_t c = 1; c <= 3; ++c) expected[c - 1] = prior[c] * c / mass;
  }
  CHECK(expected == std::vector<Rational>{Rational(1, 6), Rational(1, 3),
                                          Rational(1, 2)});

  const Ensemble prior = prepare_equal_weight(2, 3, StatisticsKind::BoseEinstein);
  const Ensemble post = condition_on_record(prior, DrawRecord({1, 0}));
  CHECK(post.particles() == 2);
  CHECK(post.probability_of(OccupationVector({2, 0})) == expected[2]);
  CHECK(post.probability_of(OccupationVector({1, 1})) == expected[1]);
  CHECK(post.probability_of(OccupationVector({0, 2})) == expected[0]);
}

TEST_CASE("record conditioning edge cases") {
  SUBCASE("empty record is the identity") {
    for (const auto stats : kAllStats) {
      const Ensemble e = prepare_equal_weight(3, 3, stats);
      CHECK(condition_on_record(e, DrawRecord({0, 0, 0})) == e);
    }
  }
  SUBCASE("drawing every fermion leaves the empty point mass") {
    const Ensemble fd = prepare_equal_weight(3, 2, StatisticsKind::FermiDirac);
    const Ensemble post = condition_on_record(fd, DrawRecord({1, 1, 0}));
    CHECK(post.particles() == 0);
    CHECK(post.probability_of(OccupationVector({0, 0, 0})) == 1);
  }
  SUBCASE("unrealizable records are zero-probability draws") {
    const Ensemble fd = prepare_equal_weight(3, 2, StatisticsKind::FermiDirac);
    CHECK_THROWS_AS(condition_on_record(fd, DrawRecord({2, 0, 0})),
                    ZeroProbabilityDraw);
  }
  SUBCASE("records longer than the system are precondition violations") {
    const Ensemble be = prepare_equal_weight(2, 2, StatisticsKind::BoseEinstein);
    CHECK_THROWS_AS(condition_on_record(be, DrawRecord({2, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(condition_on_record(be, DrawRecord({1, 0, 0})),
                    std::invalid_argument);
  }
}

TEST_CASE("fraction distributions") {
  SUBCASE("flat boson prior spreads R uniformly") {
    const auto dist = fraction_distribution(
        prepare_equal_weight(2, 4, StatisticsKind::BoseEinstein), 0);
    REQUIRE(dist.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(dist[i].fraction == Rational(i, 4));
      CHECK(dist[i].probability == Rational(1, 5));
    }
  }
  SUBCASE("classical two-coin prior") {
    const auto dist = fraction_distribution(
        prepare_equal_weight(2, 2, StatisticsKind::Classical), 0);
    REQUIRE(dist.size() == 3);
    CHECK(dist[0] == FractionPoint{Rational(0), Rational(1, 4)});
    CHECK(dist[1] == FractionPoint{Rational(1, 2), Rational(1, 2)});
    CHECK(dist[2] == FractionPoint{Rational(1), Rational(1, 4)});
  }
  SUBCASE("the unique fermion state pins R to 1/2") {
    const auto dist = fraction_distribution(
        prepare_equal_weight(2, 2, StatisticsKind::FermiDirac), 0);
    REQUIRE(dist.size() == 1);
    CHECK(dist[0] == FractionPoint{Rational(1, 2), Rational(1)});
  }
}

TEST_CASE("expected fractions") {
  // Level exchange symmetry puts every prior at exactly 1/2.
  for (const auto stats : kAllStats)
    for (std::int64_t n = 1; n <= 10; ++n)
      CHECK(expectation_fraction(prepare_equal_weight(2, n, stats), 0) ==
            Rational(1, 2));

  // One observed boy pushes the boson expectation to exactly 2/3.
  for (std::int64_t n = 2; n <= 40; ++n) {
    const Ensemble prior = prepare_equal_weight(2, n, StatisticsKind::BoseEinstein);
    CHECK(expectation_fraction(condition_on_draw(prior, 0).posterior, 0) ==
          Rational(2, 3));
  }

  // Three-level condensate: one draw in level 1 leaves half there, at any n.
  const Ensemble prior = prepare_equal_weight(3, 30, StatisticsKind::BoseEinstein);
  CHECK(expectation_fraction(
            condition_on_record(prior, DrawRecord({1, 0, 0})), 0) ==
        Rational(1, 2));
}

TEST_CASE("every operation returns exactly normalized ensembles") {
  for (const auto stats : kAllStats) {
    for (std::int64_t k = 2; k <= 4; ++k) {
      for (std::int64_t n = 1; n <= (stats == StatisticsKind::FermiDirac ? k : 6);
           ++n) {
        const Ensemble e = prepare_equal_weight(k, n, stats);
        CHECK(weight_sum(e) == 1);
        CHECK(weight_sum(condition_on_presence(e, 0, 1)) == 1);
        const DrawResult drawn = condition_on_draw(e, 0);
        CHECK(weight_sum(drawn.posterior) == 1);
        if (n >= 2)
          CHECK(weight_sum(condition_on_record(
                    e, DrawRecord(std::vector<std::int64_t>(
                           static_cast<std::size_t>(k), 0)))) == 1);
      }
    }
  }
}

TEST_CASE("draw marginals are uniform over levels for equal-weight priors") {
  for (const auto stats : kAllStats) {
    for (std::int64_t k = 2; k <= 4; ++k) {
      for (std::int64_t n = 1; n <= (stats == StatisticsKind::FermiDirac ? k : 6);
           ++n) {
        const Ensemble e = prepare_equal_weight(k, n, stats);
        for (std::size_t level = 0; level < static_cast<std::size_t>(k); ++level)
          CHECK(condition_on_draw(e, level).draw_probability == Rational(1, k));
      }
    }
  }
}

TEST_CASE("classical draws leave the remaining particles independent") {
  for (std::int64_t k = 2; k <= 4; ++k) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      const Ensemble prior = prepare_equal_weight(k, n, StatisticsKind::Classical);
      for (std::size_t level = 0; level < static_cast<std::size_t>(k); ++level) {
        CHECK(condition_on_draw(prior, level).posterior ==
              prepare_equal_weight(k, n - 1, StatisticsKind::Classical));
      }
    }
  }
}

TEST_CASE("record conditioning is order independent") {
  std::mt19937_64 gen(20250811);
  int checked = 0;
  while (checked < 100) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(gen() % 2);
    const std::int64_t n = 2 + static_cast<std::int64_t>(gen() % 11);
    const auto stats = kAllStats[gen() % 3];
    if (stats == StatisticsKind::FermiDirac && n > k) continue;

    const Ensemble prior = prepare_equal_weight(k, n, stats);
    // Build a realizable record: a sub-multiset of a random support vector.
    const auto support = enumerate_support(k, n, stats);
    const OccupationVector& base = support[gen() % support.size()];
    std::vector<std::int64_t> record_counts(static_cast<std::size_t>(k), 0);
    for (std::size_t j = 0; j < record_counts.size(); ++j)
      record_counts[j] = static_cast<std::int64_t>(
          gen() % static_cast<std::uint64_t>(base[j] + 1));
    const DrawRecord record(record_counts);
    if (record.total() == n && record.total() > 0) continue;

    const Ensemble direct = condition_on_record(prior, record);
    Ensemble sequential = prior;
    for (const std::size_t level : shuffled_draw_sequence(record, gen))
      sequential = condition_on_draw(sequential, level).posterior;
    CHECK(direct == sequential);
    ++checked;
  }
}

TEST_CASE("daycare posterior closed form holds to n = 200") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    const Ensemble prior = prepare_equal_weight(2, n, StatisticsKind::BoseEinstein);
    const Ensemble post = condition_on_draw(prior, 0).posterior;
    Rational sum;
    for (std::int64_t m = 0; m < n; ++m) {
      const Rational p = post.probability_of(OccupationVector({m, n - 1 - m}));
      CHECK(p == Rational(2 * (m + 1), n * (n + 1)));
      sum += p;
    }
    CHECK(sum == 1);
  }
}

TEST_CASE("fermion ensembles never break the Pauli bound") {
  const Ensemble prior = prepare_equal_weight(4, 3, StatisticsKind::FermiDirac);
  const Ensemble chained = condition_on_record(
      condition_on_presence(condition_on_draw(prior, 1).posterior, 0, 1),
      DrawRecord({1, 0, 0, 0}));
  for (const auto& [m, p] : chained.weights()) CHECK(m.max_count() <= 1);
}

TEST_CASE("observing a boson level can only raise its expected share") {
  for (std::int64_t k = 2; k <= 3; ++k) {
    for (std::int64_t n = 2; n <= 12; ++n) {
      const Ensemble prior = prepare_equal_weight(k, n, StatisticsKind::BoseEinstein);
      for (std::size_t level = 0; level < static_cast<std::size_t>(k); ++level) {
        const Ensemble post = condition_on_draw(prior, level).posterior;
        CHECK(expectation_fraction(post, level) >=
              expectation_fraction(prior, level));
      }
    }
  }
}

TEST_CASE("level relabeling commutes with conditioning") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(gen() % 3);
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 6);
    const auto stats = kAllStats[gen() % 3];
    if (stats == StatisticsKind::FermiDirac && n > k) continue;

    std::vector<std::size_t> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen);
    const std::size_t level = gen() % static_cast<std::size_t>(k);

    const Ensemble e = prepare_equal_weight(k, n, stats);
    CHECK(permuted(e, perm) == e);  // equal-weight priors are symmetric

    const DrawResult a = condition_on_draw(e, level);
    const DrawResult b = condition_on_draw(permuted(e, perm), perm[level]);
    CHECK(a.draw_probability == b.draw_probability);
    CHECK(permuted(a.posterior, perm) == b.posterior);

    if (e.probability_of(OccupationVector(std::vector<std::int64_t>(
            static_cast<std::size_t>(k), 0))) == 0) {
      const Ensemble pa = condition_on_presence(e, level, 1);
      const Ensemble pb = condition_on_presence(permuted(e, perm), perm[level], 1);
      CHECK(permuted(pa, perm) == pb);
    }
  }
}

TEST_CASE("ensemble constructor enforces its invariants") {
  Ensemble::WeightMap ok;
  ok.emplace(OccupationVector({1, 1}), Rational(1));
  CHECK_NOTHROW(Ensemble(2, 2, StatisticsKind::FermiDirac, ok));

  Ensemble::WeightMap not_normalized;
  not_normalized.emplace(OccupationVector({1, 1}), Rational(1, 2));
  CHECK_THROWS_AS(Ensemble(2, 2, StatisticsKind::BoseEinstein, not_normalized),
                  std::invalid_argument);

  Ensemble::WeightMap wrong_total;
  wrong_total.emplace(OccupationVector({1, 0}), Rational(1));
  CHECK_THROWS_AS(Ensemble(2, 2, StatisticsKind::BoseEinstein, wrong_total),
                  std::invalid_argument);

  Ensemble::WeightMap pauli_broken;
  pauli_broken.emplace(OccupationVector({2, 0}), Rational(1));
  CHECK_THROWS_AS(Ensemble(2, 2, StatisticsKind::FermiDirac, pauli_broken),
                  std::invalid_argument);

  CHECK_THROWS_AS(Ensemble(2, 2, StatisticsKind::BoseEinstein, {}),
                  std::invalid_argument);
}
