#include "benford/discrepancy.hpp"

#include "benford/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace benford {
namespace {

void validate_points(const std::vector<double>& points) {
  if (points.empty()) {
    throw DomainError("SamplePoints: at least one point is required");
  }
  for (double u : points) {
    if (!(u >= 0.0 && u < 1.0)) {
      throw DomainError("SamplePoints: points must lie in [0, 1)");
    }
  }
}

}  // namespace

SamplePoints SamplePoints::from_unsorted(std::vector<double> points) {
  validate_points(points);
  std::sort(points.begin(), points.end());
  return SamplePoints(std::move(points));
}

SamplePoints SamplePoints::from_sorted(std::vector<double> points) {
  validate_points(points);
  if (!std::is_sorted(points.begin(), points.end())) {
    throw DomainError("SamplePoints::from_sorted: input is not sorted");
  }
  return SamplePoints(std::move(points));
}

namespace detail {

double star_sorted(std::span<const double> u) {
  const auto n = static_cast<double>(u.size());
  double best = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double above = static_cast<double>(i + 1) / n - u[i];
    const double below = u[i] - static_cast<double>(i) / n;
    best = std::max({best, above, below});
  }
  return best;
}

double extreme_sorted(std::span<const double> u) {
  const auto n = static_cast<double>(u.size());
  double over = -1.0;
  double under = -1.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    over = std::max(over, static_cast<double>(i + 1) / n - u[i]);
    under = std::max(under, u[i] - static_cast<double>(i) / n);
  }
  return std::min(1.0, over + under);
}

}  // namespace detail

double star_discrepancy(const SamplePoints& sp) { return detail::star_sorted(sp.points()); }

double extreme_discrepancy(const SamplePoints& sp) { return detail::extreme_sorted(sp.points()); }

double extreme_discrepancy_oracle(const SamplePoints& sp) {
  const auto u = sp.points();
  if (u.size() > kOracleMaxPoints) {
    throw SizeError("extreme_discrepancy_oracle: N = " + std::to_string(u.size()) +
                    " exceeds guard " + std::to_string(kOracleMaxPoints));
  }
  const auto n = static_cast<double>(u.size());

  // An endpoint is a value plus the index of the first sample point the
  // interval boundary admits (for a) or excludes (for b). Counting by
  // index difference realises the one-sided limits at sample points.
  struct Endpoint {
    double value;
    std::ptrdiff_t index;
  };
  std::vector<Endpoint> lefts;
  std::vector<Endpoint> rights;
  lefts.push_back({0.0, 0});
  for (double v : u) {
    const auto lo = std::lower_bound(u.begin(), u.end(), v) - u.begin();
    const auto hi = std::upper_bound(u.begin(), u.end(), v) - u.begin();
    lefts.push_back({v, lo});   // a = v, includes v
    lefts.push_back({v, hi});   // a -> v+, excludes v
    rights.push_back({v, lo});  // b = v, excludes v
    rights.push_back({v, hi});  // b -> v+, includes v
  }
  rights.push_back({1.0, static_cast<std::ptrdiff_t>(u.size())});

  double best = 0.0;
  for (const auto& a : lefts) {
    for (const auto& b : rights) {
      if (b.value < a.value) continue;
      const auto count = std::max<std::ptrdiff_t>(0, b.index - a.index);
      const double dev = std::abs(static_cast<double>(count) / n - (b.value - a.value));
      best = std::max(best, dev);
    }
  }
  return best;
}

DiscrepancyReport discrepancy_report(const SamplePoints& sp) {
  return {sp.size(), star_discrepancy(sp), extreme_discrepancy(sp)};
}

DiscrepancyReport benford_discrepancy(std::span<const double> xs) {
  std::vector<double> fracs;
  fracs.reserve(xs.size());
  for (double x : xs) fracs.push_back(log10_frac(x));
  return discrepancy_report(SamplePoints::from_unsorted(std::move(fracs)));
}

DiscrepancyReport benford_discrepancy(std::span<const LogPower> xs) {
  std::vector<double> fracs;
  fracs.reserve(xs.size());
  for (const auto& x : xs) fracs.push_back(x.frac);
  return discrepancy_report(SamplePoints::from_unsorted(std::move(fracs)));
}

void PrefixDiscrepancy::extend(std::span<const double> chunk) {
  for (double v : chunk) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw DomainError("PrefixDiscrepancy: points must lie in [0, 1)");
    }
  }
  const auto mid = static_cast<std::ptrdiff_t>(sorted_.size());
  sorted_.insert(sorted_.end(), chunk.begin(), chunk.end());
  std::sort(sorted_.begin() + mid, sorted_.end());
  std::inplace_merge(sorted_.begin(), sorted_.begin() + mid, sorted_.end());
}

DiscrepancyReport PrefixDiscrepancy::report() const {
  if (sorted_.empty()) {
    throw DomainError("PrefixDiscrepancy: no points");
  }
  return {sorted_.size(), detail::star_sorted(sorted_), detail::extreme_sorted(sorted_)};
}

}  // namespace benford
