#pragma once

#include "benford/discrepancy.hpp"
#include "benford/schedule.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace benford {

using Complex = std::complex<double>;

/// Constants of the discrepancy rate bound. C0 stands in for the random
/// constant of the almost-sure bound; it is a user-chosen scale.
struct RateParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 1.0;
  double theta = 0.0;
  double c0 = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double C0 = 1.0;
  Schedule r = Schedule::polynomial(1.0, -1.0);  // r_n = 1/n by default

  /// Throws DomainError unless alpha..C0 are positive and theta >= 0.
  void validate() const;

  /// min(beta - delta * theta, 1); the bound decays only when positive.
  double decay_exponent() const noexcept;
};

/// Exponent schedules d_n are plain schedules with d_n > 0.
using ExponentSchedule = Schedule;

/// (1/N) sum_n e^{2 pi i h u_n}; throws DomainError for h == 0.
Complex weyl_sum(const SamplePoints& sp, std::int64_t h);

inline constexpr std::int64_t kMaxHarmonics = 10'000'000;

/// safety * (1/(H+1) + sum_{h<=H} |weyl_sum(sp, h)| / h).
double erdos_turan_bound(const SamplePoints& sp, std::int64_t H, double safety = 1.0);

/// sum_{j=1}^{k} e^{2 pi i h ln j} by direct summation.
Complex partial_exponential_sum(std::int64_t k, std::int64_t h);

/// All prefix sums of partial_exponential_sum for k = 1..k_max; entry
/// [k - 1] equals partial_exponential_sum(k, h).
std::vector<Complex> partial_exponential_sums(std::int64_t k_max, std::int64_t h);

/// k / (2 pi h) + 1 + pi h ln k.
double lemma_bound(std::int64_t k, std::int64_t h);

/// 8/sqrt(h) + (1 + 4 sqrt(h))/sqrt(n) + 6/n + 3h/(n sqrt(n)); bounds the
/// characteristic function of ln X for X uniform on {1..n}.
double van_der_corput_bound(std::int64_t n, std::int64_t h);

/// c1 h^-gamma + c2 h^delta r_n.
double prop_bound_form(std::int64_t h, std::int64_t n, const RateParams& params);

/// C0 (ln N)^2 N^-1/2 + c0 ((1/N) sum d_n^-gamma
///   + (ln N)^{1/(delta+1)} N^{-min(beta - delta theta, 1)/(delta+1)}).
/// Requires N >= 2.
double theorem1_rhs(std::int64_t N, const RateParams& params, const ExponentSchedule& d);

/// floor((ln N)^{-1/(delta+1)} N^{min(beta - delta theta, 1)/(delta+1)}) + 1.
std::int64_t optimal_H(std::int64_t N, const RateParams& params);

}  // namespace benford
