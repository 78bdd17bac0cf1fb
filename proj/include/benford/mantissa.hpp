#pragma once

#include <cstdint>

namespace benford {

/// Base-10 decomposition x = mantissa * 10^exponent with mantissa in [1, 10).
struct MantissaDecomposition {
  double mantissa = 1.0;
  int exponent = 0;

  int first_digit() const noexcept { return static_cast<int>(mantissa); }
};

/// Throws DomainError for non-positive, NaN or infinite input.
MantissaDecomposition decompose(double x);

/// Fractional part of log10(x), in [0, 1).
double log10_frac(double x);

/// Leading significant decimal digit of x, in 1..9.
int first_digit(double x);

/// Benford measure of [s, t) for 1 <= s < t <= 10, i.e. log10(t / s).
double benford_measure(double s, double t);

/// log10(1 + 1/digit) for digit in 1..9.
double benford_digit_probability(int digit);

/// A positive value 10^(exponent + frac) held in log space so that huge
/// powers x^d never overflow. frac is in [0, 1).
struct LogPower {
  std::int64_t exponent = 0;
  double frac = 0.0;

  /// Splits y + correction into integer and fractional parts. The
  /// correction carries low-order bits lost when y was rounded.
  static LogPower from_log10(double y, double correction = 0.0);

  double mantissa() const;
  int first_digit() const;
  double log10_value() const { return static_cast<double>(exponent) + frac; }
};

/// x^d carried in log space; x > 0 finite, d finite.
LogPower log_power(double x, double d);

}  // namespace benford
