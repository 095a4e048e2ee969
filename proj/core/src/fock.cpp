#include "qstat/fock.hpp"

#include "qstat/errors.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qstat {
namespace {

void check_system_shape(std::int64_t k, std::int64_t n) {
  if (k < 1) throw std::invalid_argument("level count must be at least 1");
  if (n < 0) throw std::invalid_argument("particle count must be non-negative");
}

void check_fermion_fill(std::int64_t k, std::int64_t n) {
  if (n > k)
    throw FermionOverfill("cannot place " + std::to_string(n) +
                          " fermions in " + std::to_string(k) + " levels");
}

// Occupation vectors over `levels` levels holding `particles` particles,
// with per-level counts capped at 1 for fermions. Tolerates levels == 0.
BigInt support_count(std::int64_t levels, std::int64_t particles, bool fermi) {
  if (particles == 0) return 1;
  if (levels == 0) return 0;
  return fermi ? binomial(levels, particles)
               : binomial(levels + particles - 1, particles);
}

}  // namespace

std::string_view to_string(StatisticsKind stats) {
  switch (stats) {
    case StatisticsKind::Classical: return "classical";
    case StatisticsKind::BoseEinstein: return "be";
    case StatisticsKind::FermiDirac: return "fd";
  }
  throw std::invalid_argument("unknown statistics kind");
}

StatisticsKind statistics_from_string(std::string_view token) {
  if (token == "classical") return StatisticsKind::Classical;
  if (token == "be") return StatisticsKind::BoseEinstein;
  if (token == "fd") return StatisticsKind::FermiDirac;
  throw std::invalid_argument("unknown statistics token: " +
                              std::string(token));
}

std::string_view display_name(StatisticsKind stats) {
  switch (stats) {
    case StatisticsKind::Classical: return "classical";
    case StatisticsKind::BoseEinstein: return "Bose-Einstein";
    case StatisticsKind::FermiDirac: return "Fermi-Dirac";
  }
  throw std::invalid_argument("unknown statistics kind");
}

OccupationVector::OccupationVector(std::vector<std::int64_t> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty())
    throw std::invalid_argument("occupation vector needs at least one level");
  for (const std::int64_t c : counts_) {
    if (c < 0) throw std::invalid_argument("occupation counts must be >= 0");
    total_ += c;
  }
}

std::int64_t OccupationVector::max_count() const {
  if (counts_.empty()) return 0;
  return *std::max_element(counts_.begin(), counts_.end());
}

OccupationVector OccupationVector::with_decrement(std::size_t level) const {
  if (level >= counts_.size())
    throw std::invalid_argument("level index out of range");
  if (counts_[level] < 1)
    throw std::invalid_argument("cannot remove a particle from an empty level");
  OccupationVector out(*this);
  --out.counts_[level];
  --out.total_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const OccupationVector& m) {
  os << '(';
  for (std::size_t j = 0; j < m.levels(); ++j) {
    if (j != 0) os << ',';
    os << m[j];
  }
  return os << ')';
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt acc = 1;
  for (std::int64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= n - r + i;  // exact at every step: the partial product is C(n-r+i, i)
    acc /= i;
  }
  return acc;
}

BigInt integer_power(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  return boost::multiprecision::pow(BigInt(base),
                                    static_cast<unsigned>(exponent));
}

BigInt falling_factorial(std::int64_t n, std::int64_t steps) {
  if (steps < 0) throw std::invalid_argument("negative falling factorial");
  if (steps > n) return 0;
  BigInt acc = 1;
  for (std::int64_t i = 0; i < steps; ++i) acc *= n - i;
  return acc;
}

BigInt state_count(std::int64_t k, std::int64_t n, StatisticsKind stats) {
  check_system_shape(k, n);
  switch (stats) {
    case StatisticsKind::Classical:
      return integer_power(k, n);
    case StatisticsKind::BoseEinstein:
      return binomial(k + n - 1, n);
    case StatisticsKind::FermiDirac:
      check_fermion_fill(k, n);
      return binomial(k, n);
  }
  throw std::invalid_argument("unknown statistics kind");
}

std::vector<OccupationVector> enumerate_support(std::int64_t k, std::int64_t n,
                                                StatisticsKind stats,
                                                std::int64_t max_states) {
  check_system_shape(k, n);
  if (max_states < 1)
    throw std::invalid_argument("state cap must be at least 1");
  const bool fermi = stats == StatisticsKind::FermiDirac;
  if (fermi) check_fermion_fill(k, n);

  const BigInt total = support_count(k, n, fermi);
  if (total > max_states)
    throw StateSpaceTooLarge("support holds " + total.str() +
                             " vectors, cap is " + std::to_string(max_states));

  std::vector<OccupationVector> out;
  out.reserve(total.convert_to<std::size_t>());
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(k), 0);
  auto fill = [&](auto&& self, std::size_t level,
                  std::int64_t remaining) -> void {
    if (level + 1 == prefix.size()) {
      prefix[level] = remaining;
      out.emplace_back(prefix);
      return;
    }
    const auto tail = static_cast<std::int64_t>(prefix.size() - level - 1);
    const std::int64_t hi = fermi ? std::min<std::int64_t>(remaining, 1)
                                  : remaining;
    const std::int64_t lo = fermi ? std::max<std::int64_t>(0, remaining - tail)
                                  : 0;
    for (std::int64_t c = hi; c >= lo; --c) {
      prefix[level] = c;
      self(self, level + 1, remaining - c);
    }
  };
  fill(fill, 0, n);
  return out;
}

OccupationVector unrank_support(std::int64_t k, std::int64_t n,
                                StatisticsKind stats, const BigInt& index) {
  check_system_shape(k, n);
  if (stats == StatisticsKind::Classical)
    throw std::invalid_argument(
        "unrank_support orders quantum supports; classical states are "
        "weighted, not uniform");
  const bool fermi = stats == StatisticsKind::FermiDirac;
  if (fermi) check_fermion_fill(k, n);
  if (index < 0 || index >= support_count(k, n, fermi))
    throw std::invalid_argument("support index out of range");

  std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
  BigInt rest(index);
  std::int64_t remaining = n;
  for (std::size_t level = 0; level + 1 < counts.size(); ++level) {
    const auto tail = static_cast<std::int64_t>(counts.size() - level - 1);
    const std::int64_t hi = fermi ? std::min<std::int64_t>(remaining, 1)
                                  : remaining;
    const std::int64_t lo = fermi ? std::max<std::int64_t>(0, remaining - tail)
                                  : 0;
    for (std::int64_t c = hi; c >= lo; --c) {
      const BigInt block = support_count(tail, remaining - c, fermi);
      if (rest < block) {
        counts[level] = c;
        remaining -= c;
        break;
      }
      rest -= block;
    }
  }
  counts.back() = remaining;
  return OccupationVector(std::move(counts));
}

Rational multinomial_weight(const OccupationVector& m) {
  if (m.levels() == 0)
    throw std::invalid_argument("occupation vector needs at least one level");
  BigInt arrangements = factorial(m.total());
  for (const std::int64_t c : m.counts()) arrangements /= factorial(c);
  return Rational(arrangements,
                  integer_power(static_cast<std::int64_t>(m.levels()),
                                m.total()));
}

}  // namespace qstat
