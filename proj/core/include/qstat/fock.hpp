#pragma once

#include "qstat/rational.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace qstat {

enum class StatisticsKind { Classical, BoseEinstein, FermiDirac };

// Short tokens used by the CLI and the JSON schema: "classical", "be", "fd".
std::string_view to_string(StatisticsKind stats);
StatisticsKind statistics_from_string(std::string_view token);
// Human-readable form for reports ("Bose-Einstein", ...).
std::string_view display_name(StatisticsKind stats);

/// Number of particles per level. Immutable after construction; the total is
/// cached so ensembles can validate cheaply.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<std::int64_t> counts);

  std::size_t levels() const { return counts_.size(); }
  std::int64_t total() const { return total_; }
  std::int64_t count(std::size_t level) const { return counts_.at(level); }
  std::int64_t operator[](std::size_t level) const { return counts_[level]; }
  std::span<const std::int64_t> counts() const { return counts_; }
  std::int64_t max_count() const;

  // Copy with one particle removed from `level`; requires count(level) >= 1.
  OccupationVector with_decrement(std::size_t level) const;

  friend bool operator==(const OccupationVector&,
                         const OccupationVector&) = default;
  friend auto operator<=>(const OccupationVector&,
                          const OccupationVector&) = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const OccupationVector& m);

// Enumeration and ensemble iteration order everywhere: lexicographically
// descending counts, so the all-in-level-1 vector comes first. Not part of
// any contract, but fixed for reproducible output.
struct DescendingCountOrder {
  bool operator()(const OccupationVector& a, const OccupationVector& b) const {
    return a > b;
  }
};

inline constexpr std::int64_t kDefaultStateCap = 10'000'000;

BigInt factorial(std::int64_t n);
// Zero outside the Pascal triangle, so callers need no range guards.
BigInt binomial(std::int64_t n, std::int64_t r);
BigInt integer_power(std::int64_t base, std::int64_t exponent);
BigInt falling_factorial(std::int64_t n, std::int64_t steps);

// Classical counts k^n labeled outcomes; Bose-Einstein counts the
// C(k+n-1, n) occupation vectors; Fermi-Dirac counts the C(k, n) ways to
// fill distinct levels. Throws FermionOverfill for Fermi-Dirac with n > k.
BigInt state_count(std::int64_t k, std::int64_t n, StatisticsKind stats);

// Exhaustive duplicate-free support in descending order. Classical shares
// the Bose-Einstein support (the weights differ, not the vectors). Throws
// StateSpaceTooLarge before allocating when the count exceeds `max_states`.
std::vector<OccupationVector> enumerate_support(
    std::int64_t k, std::int64_t n, StatisticsKind stats,
    std::int64_t max_states = kDefaultStateCap);

// Index into the descending support without materializing it; the inverse of
// the enumeration position. Bose-Einstein and Fermi-Dirac only: classical
// support carries non-uniform weights, so indexing it is never meaningful.
OccupationVector unrank_support(std::int64_t k, std::int64_t n,
                                StatisticsKind stats, const BigInt& index);

// Probability of the occupation class under distinguishable particles:
// n! / (prod_j m_j!) / k^n.
Rational multinomial_weight(const OccupationVector& m);

}  // namespace qstat
