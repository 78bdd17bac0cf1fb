#pragma once

#include <functional>
#include <span>

namespace benford {

/// Linear-interpolation sample quantile (Hyndman-Fan type 7). q in [0, 1].
double quantile(std::span<const double> values, double q);
double median(std::span<const double> values);
double mean(std::span<const double> values);
/// Standard error of the mean; 0 for fewer than two values.
double standard_error(std::span<const double> values);

struct KendallResult {
  double tau = 0.0;
  /// P[tau >= observed] under exchangeability (exact for n <= 8, normal
  /// approximation with continuity correction above).
  double p_increasing = 1.0;
};

/// Kendall tau-a of y against its index order 0, 1, ..., n-1.
KendallResult kendall_trend(std::span<const double> y);

/// Two-sided Kolmogorov-Smirnov distance between the empirical law of
/// `sorted` and `cdf`. Left limits of `cdf` are taken with nextafter, so
/// step CDFs of integer-valued laws are handled exactly.
double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf);

/// Asymptotic critical value c_alpha / sqrt(n) of the one-sample KS test,
/// alpha in {0.10, 0.05, 0.01, 0.001}.
double ks_critical_value(std::size_t n, double alpha);

}  // namespace benford
