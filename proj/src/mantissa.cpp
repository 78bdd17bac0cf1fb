#include "benford/mantissa.hpp"

#include "benford/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace benford {
namespace {

constexpr std::array<double, 23> kExactPow10 = {
    1e0,  1e1,  1e2,  1e3,  1e4,  1e5,  1e6,  1e7,  1e8,  1e9,  1e10, 1e11,
    1e12, 1e13, 1e14, 1e15, 1e16, 1e17, 1e18, 1e19, 1e20, 1e21, 1e22};

double pow10_nonneg(int k) {
  if (k < static_cast<int>(kExactPow10.size())) {
    return kExactPow10[static_cast<std::size_t>(k)];
  }
  return std::pow(10.0, k);
}

// x * 10^k, dividing by exact powers where possible. Values of k beyond
// the normal range (subnormal inputs) are applied in two steps.
double scale_by_pow10(double x, int k) {
  if (k > 300) {
    return scale_by_pow10(x * 1e300, k - 300);
  }
  if (k < -300) {
    return scale_by_pow10(x / 1e300, k + 300);
  }
  return k >= 0 ? x * pow10_nonneg(k) : x / pow10_nonneg(-k);
}

void require_positive_finite(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be positive and finite");
  }
}

const double kBelowTen = std::nextafter(10.0, 0.0);
const double kBelowOne = std::nextafter(1.0, 0.0);

// log10(k) for k = 0..10; index 0 unused.
const std::array<double, 11> kLog10Digits = [] {
  std::array<double, 11> t{};
  for (int k = 1; k <= 10; ++k) t[static_cast<std::size_t>(k)] = std::log10(static_cast<double>(k));
  return t;
}();

}  // namespace

MantissaDecomposition decompose(double x) {
  require_positive_finite(x, "decompose");
  int e = static_cast<int>(std::floor(std::log10(x)));
  double m = scale_by_pow10(x, -e);
  if (m >= 10.0) {
    ++e;
    m = scale_by_pow10(x, -e);
  } else if (m < 1.0) {
    --e;
    m = scale_by_pow10(x, -e);
  }
  // x within half an ulp of a power of ten can still round onto 10.
  if (m >= 10.0) m = kBelowTen;
  if (m < 1.0) m = 1.0;
  return {m, e};
}

double log10_frac(double x) {
  const double f = std::log10(decompose(x).mantissa);
  return f >= 1.0 ? kBelowOne : f;
}

int first_digit(double x) { return decompose(x).first_digit(); }

double benford_measure(double s, double t) {
  if (!(s >= 1.0) || !(t <= 10.0) || !(s < t)) {
    throw DomainError("benford_measure: requires 1 <= s < t <= 10");
  }
  return std::log10(t / s);
}

double benford_digit_probability(int digit) {
  if (digit < 1 || digit > 9) {
    throw DomainError("benford_digit_probability: digit must be in 1..9");
  }
  return benford_measure(digit, digit + 1);
}

LogPower LogPower::from_log10(double y, double correction) {
  if (!std::isfinite(y) || !std::isfinite(correction)) {
    throw DomainError("LogPower: non-finite log10 value");
  }
  const double fl = std::floor(y);
  double frac = (y - fl) + correction;
  auto exponent = static_cast<std::int64_t>(fl);
  if (frac >= 1.0) {
    frac -= 1.0;
    ++exponent;
  } else if (frac < 0.0) {
    frac += 1.0;
    --exponent;
  }
  if (frac >= 1.0) frac = kBelowOne;
  if (frac < 0.0) frac = 0.0;
  return {exponent, frac};
}

double LogPower::mantissa() const {
  const double m = std::pow(10.0, frac);
  if (m >= 10.0) return kBelowTen;
  return m < 1.0 ? 1.0 : m;
}

int LogPower::first_digit() const {
  int d = static_cast<int>(mantissa());
  if (d < 1) d = 1;
  if (d > 9) d = 9;
  // Align with the log10(k) thresholds used by the Benford measure.
  if (frac < kLog10Digits[static_cast<std::size_t>(d)] && d > 1) {
    --d;
  } else if (d < 9 && frac >= kLog10Digits[static_cast<std::size_t>(d) + 1]) {
    ++d;
  }
  return d;
}

LogPower log_power(double x, double d) {
  require_positive_finite(x, "log_power");
  if (!std::isfinite(d)) {
    throw DomainError("log_power: exponent must be finite");
  }
  const double l = std::log10(x);
  const double y = d * l;
  return LogPower::from_log10(y, std::fma(d, l, -y));
}

}  // namespace benford
