#pragma once

#include <cmath>
#include <complex>

namespace benford {

// Neumaier compensated accumulator. Sequential, so results are
// reproducible for a fixed summation order.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// e^{2 pi i x}, reducing x modulo 1 before the trigonometric call.
inline std::complex<double> unit_phase(double x) noexcept {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const double r = x - std::floor(x);
  return {std::cos(kTwoPi * r), std::sin(kTwoPi * r)};
}

}  // namespace benford
