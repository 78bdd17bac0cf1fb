#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace benford {

/// A deterministic sequence indexed by n >= 1. Used for exponent
/// schedules d_n, distribution parameters (p_n, a_n, b_n, ...) and the
/// r_n sequence of the rate bound.
///
///   constant      value
///   polynomial    offset + c * n^power
///   logarithmic   offset + c * (1 + ln n)
///   explicit      values[n - 1]
class Schedule {
 public:
  enum class Kind { constant, polynomial, logarithmic, explicit_list };

  Schedule() = default;

  static Schedule constant(double value);
  static Schedule polynomial(double c, double power, double offset = 0.0);
  static Schedule logarithmic(double c, double offset = 0.0);
  static Schedule explicit_list(std::vector<double> values);

  /// Accepted forms: "2.5", "n", "const:2", "poly:c=1,theta=0.5[,offset=0]",
  /// "log:c=1[,offset=0]", "list:1,2,3". Throws ConfigError.
  static Schedule parse(std::string_view text);

  /// Throws DomainError for n < 1 or n past the end of an explicit list.
  double operator()(std::int64_t n) const;

  Kind kind() const noexcept { return kind_; }
  double coefficient() const noexcept { return c_; }
  double power() const noexcept { return power_; }
  double offset() const noexcept { return offset_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Round-trips through parse().
  std::string to_string() const;

  bool operator==(const Schedule&) const = default;

 private:
  Kind kind_ = Kind::constant;
  double c_ = 1.0;
  double power_ = 0.0;
  double offset_ = 0.0;
  std::vector<double> values_;
};

}  // namespace benford
