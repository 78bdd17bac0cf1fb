#pragma once

#include "benford/mantissa.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace benford {

/// Non-empty multiset of points in [0, 1), stored sorted ascending.
class SamplePoints {
 public:
  /// Sorts a private copy. Throws DomainError if empty or any point lies
  /// outside [0, 1).
  static SamplePoints from_unsorted(std::vector<double> points);
  /// Validates that the input is already sorted.
  static SamplePoints from_sorted(std::vector<double> points);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  explicit SamplePoints(std::vector<double> points) : points_(std::move(points)) {}
  std::vector<double> points_;
};

struct DiscrepancyReport {
  std::size_t n = 0;
  double star = 0.0;
  double extreme = 0.0;
};

/// sup over [0, b) of |empirical frequency - b|.
double star_discrepancy(const SamplePoints& sp);

/// sup over 0 <= a < b < 1 of |empirical frequency of [a, b) - (b - a)|,
/// via max_i(i/N - u_i) + max_j(u_j - (j-1)/N).
double extreme_discrepancy(const SamplePoints& sp);

inline constexpr std::size_t kOracleMaxPoints = 2000;

/// Brute-force supremum over all candidate endpoint pairs, including
/// one-sided limits at the sample points. O(N^2 log N); throws SizeError
/// above kOracleMaxPoints.
double extreme_discrepancy_oracle(const SamplePoints& sp);

DiscrepancyReport discrepancy_report(const SamplePoints& sp);

/// Discrepancy of the mantissae of xs against the Benford measure, i.e. of
/// the fractional parts of log10 xs.
DiscrepancyReport benford_discrepancy(std::span<const double> xs);
DiscrepancyReport benford_discrepancy(std::span<const LogPower> xs);

/// Sorted accumulator for discrepancies of growing prefixes of a sequence.
class PrefixDiscrepancy {
 public:
  /// Appends points in [0, 1); each chunk is sorted then merged.
  void extend(std::span<const double> chunk);
  std::size_t size() const noexcept { return sorted_.size(); }
  DiscrepancyReport report() const;

 private:
  std::vector<double> sorted_;
};

namespace detail {
// Formulas on a sorted, non-empty span; no validation.
double star_sorted(std::span<const double> u);
double extreme_sorted(std::span<const double> u);
}  // namespace detail

}  // namespace benford
