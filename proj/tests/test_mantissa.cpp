#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "benford/errors.hpp"
#include "benford/mantissa.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace benford;

TEST_CASE("decompose on exact and boundary values") {
  auto d = decompose(1234.5);
  CHECK(d.mantissa == doctest::Approx(1.2345).epsilon(1e-15));
  CHECK(d.exponent == 3);
  CHECK(d.first_digit() == 1);

  CHECK(decompose(1.0).mantissa == 1.0);
  CHECK(decompose(1.0).exponent == 0);
  CHECK(decompose(10.0).mantissa == 1.0);
  CHECK(decompose(10.0).exponent == 1);
  CHECK(decompose(1e-5).mantissa == doctest::Approx(1.0));
  CHECK(decompose(1e-5).exponent == -5);
  CHECK(decompose(9.999999999999999).first_digit() == 9);
  CHECK(decompose(0.00731).first_digit() == 7);
  CHECK(decompose(std::numeric_limits<double>::max()).exponent == 308);
  CHECK(decompose(std::numeric_limits<double>::denorm_min()).exponent == -324);
  CHECK(decompose(std::numeric_limits<double>::denorm_min()).first_digit() == 4);
}

TEST_CASE("decompose rejects non-positive and non-finite input") {
  CHECK_THROWS_AS(decompose(0.0), DomainError);
  CHECK_THROWS_AS(decompose(-3.0), DomainError);
  CHECK_THROWS_AS(decompose(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(decompose(std::nan("")), DomainError);
}

TEST_CASE("mantissa reconstruction over 10^6 random magnitudes") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> expo(-300.0, 300.0);
  int bad = 0;
  for (int i = 0; i < 1'000'000; ++i) {
    const double x = std::pow(10.0, expo(gen));
    const auto d = decompose(x);
    if (!(d.mantissa >= 1.0 && d.mantissa < 10.0)) ++bad;
    const double back = d.mantissa * std::pow(10.0, d.exponent);
    if (std::abs(back - x) > 1e-13 * x) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("log10_frac and first_digit") {
  CHECK(log10_frac(2.0) == doctest::Approx(0.30102999566398120).epsilon(1e-15));
  CHECK(log10_frac(200.0) == doctest::Approx(0.30102999566398120).epsilon(1e-14));
  CHECK(log10_frac(1000.0) == 0.0);
  CHECK(first_digit(0.5) == 5);
  CHECK(first_digit(987654321.0) == 9);
}

TEST_CASE("Benford measure and digit probabilities") {
  CHECK(benford_measure(1.0, 10.0) == doctest::Approx(1.0));
  CHECK(benford_measure(9.0, 10.0) == doctest::Approx(0.0457574905606751).epsilon(1e-13));
  CHECK_THROWS_AS(benford_measure(2.0, 2.0), DomainError);
  CHECK_THROWS_AS(benford_measure(0.5, 2.0), DomainError);
  CHECK_THROWS_AS(benford_measure(2.0, 11.0), DomainError);
  double total = 0.0;
  for (int k = 1; k <= 9; ++k) total += benford_digit_probability(k);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(benford_digit_probability(1) == doctest::Approx(0.3010299956639812).epsilon(1e-14));
  CHECK_THROWS_AS(benford_digit_probability(0), DomainError);
  CHECK_THROWS_AS(benford_digit_probability(10), DomainError);
}

TEST_CASE("log-space powers agree with direct powers where both exist") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> base(1.0, 1000.0);
  std::uniform_real_distribution<double> expo(0.1, 40.0);
  for (int i = 0; i < 100'000; ++i) {
    const double x = base(gen);
    const double d = expo(gen);
    const double direct = std::pow(x, d);
    if (!std::isfinite(direct) || direct < 1e-300) continue;
    const auto lp = log_power(x, d);
    const auto dd = decompose(direct);
    REQUIRE(std::abs(lp.mantissa() - dd.mantissa) <= 1e-9 * dd.mantissa);
  }
}

TEST_CASE("log-space powers beyond the double range") {
  const auto p = log_power(2.0, 10000.0);
  CHECK(p.exponent == 3010);
  CHECK(p.mantissa() == doctest::Approx(1.995063116880758).epsilon(1e-9));
  CHECK(p.first_digit() == 1);
  const double f = log_power(10.0, 1e6).frac;
  CHECK((f < 1e-9 || f > 1.0 - 1e-9));
  CHECK(log_power(10.0, 3.0).mantissa() == doctest::Approx(1.0));
  CHECK_THROWS_AS(log_power(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(log_power(2.0, std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("LogPower first digit thresholds") {
  CHECK(LogPower::from_log10(0.0).first_digit() == 1);
  CHECK(LogPower::from_log10(std::log10(2.0)).first_digit() == 2);
  CHECK(LogPower::from_log10(std::nextafter(std::log10(2.0), 0.0)).first_digit() == 1);
  CHECK(LogPower::from_log10(5.0 + std::log10(9.5)).first_digit() == 9);
  const auto neg = LogPower::from_log10(-2.5);
  CHECK(neg.exponent == -3);
  CHECK(neg.frac == doctest::Approx(0.5));
}
