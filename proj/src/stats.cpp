#include "benford/stats.hpp"

#include "benford/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace benford {
namespace {

int concordance(std::span<const double> y) {
  int s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      if (y[j] > y[i]) ++s;
      else if (y[j] < y[i]) --s;
    }
  }
  return s;
}

}  // namespace

double quantile(std::span<const double> values, double q) {
  if (values.empty()) throw DomainError("quantile: empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile: q must lie in [0, 1]");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

double median(std::span<const double> values) { return quantile(values, 0.5); }

double mean(std::span<const double> values) {
  if (values.empty()) throw DomainError("mean: empty sample");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double standard_error(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  const auto n = static_cast<double>(values.size());
  return std::sqrt(ss / (n - 1.0) / n);
}

KendallResult kendall_trend(std::span<const double> y) {
  if (y.size() < 2) throw DomainError("kendall_trend: need at least two values");
  const auto n = y.size();
  const double pairs = static_cast<double>(n * (n - 1) / 2);
  const int s = concordance(y);
  KendallResult out;
  out.tau = s / pairs;
  if (n <= 8) {
    std::vector<double> perm(n);
    std::iota(perm.begin(), perm.end(), 0.0);
    std::size_t total = 0;
    std::size_t at_least = 0;
    do {
      ++total;
      if (concordance(perm) >= s) ++at_least;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.p_increasing = static_cast<double>(at_least) / static_cast<double>(total);
  } else {
    const auto nd = static_cast<double>(n);
    const double var = nd * (nd - 1.0) * (2.0 * nd + 5.0) / 18.0;
    const double z = (s - 1.0) / std::sqrt(var);
    out.p_increasing = 0.5 * std::erfc(z / std::sqrt(2.0));
  }
  return out;
}

double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  if (sorted.empty()) throw DomainError("ks_statistic: empty sample");
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double v = sorted[i];
    const double below = cdf(std::nextafter(v, -INFINITY));
    d = std::max(d, std::abs(static_cast<double>(i) / n - below));
    d = std::max(d, std::abs(static_cast<double>(j) / n - cdf(v)));
    i = j;
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0) throw DomainError("ks_critical_value: n must be positive");
  double c = 0.0;
  if (alpha == 0.10) c = 1.2238;
  else if (alpha == 0.05) c = 1.3581;
  else if (alpha == 0.01) c = 1.6276;
  else if (alpha == 0.001) c = 1.9495;
  else throw DomainError("ks_critical_value: unsupported alpha");
  return c / std::sqrt(static_cast<double>(n));
}

}  // namespace benford
