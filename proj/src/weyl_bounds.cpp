#include "benford/weyl_bounds.hpp"

#include "benford/errors.hpp"
#include "benford/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace benford {
namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be >= 1");
}

}  // namespace

void RateParams::validate() const {
  const double positives[] = {alpha, beta, gamma, delta, c0, c1, c2, C0};
  for (double v : positives) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("RateParams: alpha, beta, gamma, delta, c0, c1, c2, C0 must be positive");
    }
  }
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw DomainError("RateParams: theta must be >= 0");
  }
}

double RateParams::decay_exponent() const noexcept { return std::min(beta - delta * theta, 1.0); }

Complex weyl_sum(const SamplePoints& sp, std::int64_t h) {
  if (h == 0) throw DomainError("weyl_sum: h must be non-zero");
  const auto hd = static_cast<double>(h);
  CompensatedComplexSum acc;
  for (double u : sp.points()) acc.add(unit_phase(hd * u));
  return acc.value() / static_cast<double>(sp.size());
}

double erdos_turan_bound(const SamplePoints& sp, std::int64_t H, double safety) {
  require_positive(H, "erdos_turan_bound: H");
  if (H > kMaxHarmonics) throw SizeError("erdos_turan_bound: H exceeds 10^7");
  if (!(safety >= 1.0)) throw DomainError("erdos_turan_bound: safety must be >= 1");
  CompensatedSum acc;
  acc.add(1.0 / static_cast<double>(H + 1));
  for (std::int64_t h = 1; h <= H; ++h) {
    acc.add(std::abs(weyl_sum(sp, h)) / static_cast<double>(h));
  }
  return safety * acc.value();
}

std::vector<Complex> partial_exponential_sums(std::int64_t k_max, std::int64_t h) {
  require_positive(k_max, "partial_exponential_sums: k");
  require_positive(h, "partial_exponential_sums: h");
  const auto hd = static_cast<double>(h);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(k_max));
  CompensatedComplexSum acc;
  for (std::int64_t j = 1; j <= k_max; ++j) {
    acc.add(unit_phase(hd * std::log(static_cast<double>(j))));
    out.push_back(acc.value());
  }
  return out;
}

Complex partial_exponential_sum(std::int64_t k, std::int64_t h) {
  return partial_exponential_sums(k, h).back();
}

double lemma_bound(std::int64_t k, std::int64_t h) {
  require_positive(k, "lemma_bound: k");
  require_positive(h, "lemma_bound: h");
  const auto kd = static_cast<double>(k);
  const auto hd = static_cast<double>(h);
  return kd / (2.0 * std::numbers::pi * hd) + 1.0 + std::numbers::pi * hd * std::log(kd);
}

double van_der_corput_bound(std::int64_t n, std::int64_t h) {
  require_positive(n, "van_der_corput_bound: n");
  require_positive(h, "van_der_corput_bound: h");
  const auto nd = static_cast<double>(n);
  const auto hd = static_cast<double>(h);
  const double sn = std::sqrt(nd);
  const double sh = std::sqrt(hd);
  return 8.0 / sh + (1.0 + 4.0 * sh) / sn + 6.0 / nd + 3.0 * hd / (nd * sn);
}

double prop_bound_form(std::int64_t h, std::int64_t n, const RateParams& params) {
  require_positive(h, "prop_bound_form: h");
  require_positive(n, "prop_bound_form: n");
  const auto hd = static_cast<double>(h);
  return params.c1 * std::pow(hd, -params.gamma) + params.c2 * std::pow(hd, params.delta) * params.r(n);
}

double theorem1_rhs(std::int64_t N, const RateParams& params, const ExponentSchedule& d) {
  if (N < 2) throw DomainError("theorem1_rhs: N must be >= 2");
  const auto nd = static_cast<double>(N);
  const double ln_n = std::log(nd);

  CompensatedSum mean;
  for (std::int64_t n = 1; n <= N; ++n) {
    const double dn = d(n);
    if (!(dn > 0.0)) throw DomainError("theorem1_rhs: exponent schedule must be positive");
    mean.add(std::pow(dn, -params.gamma));
  }

  const double inv = 1.0 / (params.delta + 1.0);
  const double fluctuation = params.C0 * ln_n * ln_n / std::sqrt(nd);
  const double tail = std::pow(ln_n, inv) * std::pow(nd, -params.decay_exponent() * inv);
  return fluctuation + params.c0 * (mean.value() / nd + tail);
}

std::int64_t optimal_H(std::int64_t N, const RateParams& params) {
  if (N < 2) throw DomainError("optimal_H: N must be >= 2");
  const auto nd = static_cast<double>(N);
  const double inv = 1.0 / (params.delta + 1.0);
  const double v = std::pow(std::log(nd), -inv) * std::pow(nd, params.decay_exponent() * inv);
  if (!(v < 9.0e15)) throw SizeError("optimal_H: H does not fit in a 64-bit integer");
  return static_cast<std::int64_t>(std::floor(v)) + 1;
}

}  // namespace benford
