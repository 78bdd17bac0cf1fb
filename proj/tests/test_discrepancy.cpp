#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "benford/discrepancy.hpp"
#include "benford/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace benford;

TEST_CASE("single point") {
  auto sp = SamplePoints::from_unsorted({0.25});
  CHECK(star_discrepancy(sp) == doctest::Approx(0.75));
  CHECK(extreme_discrepancy(sp) == doctest::Approx(1.0));
  CHECK(extreme_discrepancy_oracle(sp) == doctest::Approx(1.0));
}

TEST_CASE("midpoint lattice attains the minimum") {
  for (std::size_t n : {1u, 2u, 7u, 100u, 1000u}) {
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(n));
    auto sp = SamplePoints::from_sorted(u);
    CHECK(star_discrepancy(sp) == doctest::Approx(0.5 / static_cast<double>(n)));
    CHECK(extreme_discrepancy(sp) == doctest::Approx(1.0 / static_cast<double>(n)));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(SamplePoints::from_unsorted({}), DomainError);
  CHECK_THROWS_AS(SamplePoints::from_unsorted({1.0}), DomainError);
  CHECK_THROWS_AS(SamplePoints::from_unsorted({-0.1}), DomainError);
  CHECK_THROWS_AS(SamplePoints::from_unsorted({std::nan("")}), DomainError);
  CHECK_THROWS_AS(SamplePoints::from_sorted({0.5, 0.2}), DomainError);
  std::vector<double> big(kOracleMaxPoints + 1, 0.5);
  CHECK_THROWS_AS(extreme_discrepancy_oracle(SamplePoints::from_sorted(big)), SizeError);
}

TEST_CASE("closed formulas agree with the brute-force oracle") {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> size(1, 60);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> grid(0, 9);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(gen);
    std::vector<double> pts(static_cast<std::size_t>(n));
    // Half the cases on a coarse grid so that ties and repeated points occur.
    for (auto& p : pts) p = trial % 2 == 0 ? unif(gen) : grid(gen) / 10.0;
    const auto sp = SamplePoints::from_unsorted(pts);
    const double fast = extreme_discrepancy(sp);
    const double slow = extreme_discrepancy_oracle(sp);
    if (std::abs(fast - slow) > 1e-12) ++mismatches;
    const double star = star_discrepancy(sp);
    if (!(star <= fast + 1e-15 && fast <= 2.0 * star + 1e-15)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("prefix accumulator matches recomputation") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> all;
  PrefixDiscrepancy acc;
  for (int chunk = 0; chunk < 20; ++chunk) {
    std::vector<double> c(static_cast<std::size_t>(1 + chunk * 7));
    for (auto& x : c) x = unif(gen);
    acc.extend(c);
    all.insert(all.end(), c.begin(), c.end());
    const auto direct = discrepancy_report(SamplePoints::from_unsorted(all));
    const auto inc = acc.report();
    REQUIRE(inc.n == all.size());
    CHECK(inc.star == direct.star);
    CHECK(inc.extreme == direct.extreme);
  }
  PrefixDiscrepancy bad;
  const std::vector<double> outside{1.5};
  CHECK_THROWS_AS(bad.extend(outside), DomainError);
}

TEST_CASE("Benford discrepancy of the powers of two") {
  std::vector<double> xs;
  double x = 1.0;
  for (int n = 1; n <= 1000; ++n) {
    x *= 2.0;
    xs.push_back(x);
  }
  const auto r = benford_discrepancy(xs);
  CHECK(r.n == 1000);
  CHECK(r.extreme == doctest::Approx(0.0042492).epsilon(1e-4));
  CHECK(r.star == doctest::Approx(0.0026118).epsilon(1e-4));

  std::vector<LogPower> lp;
  for (int n = 1; n <= 1000; ++n) lp.push_back(log_power(2.0, n));
  const auto r2 = benford_discrepancy(lp);
  CHECK(r2.extreme == doctest::Approx(r.extreme).epsilon(1e-9));
}

TEST_CASE("scale invariance of a Benford-exact grid") {
  // u_i = i / N exactly spread: multiplying every x by 10 leaves D unchanged.
  std::vector<double> xs, ys;
  for (int i = 0; i < 500; ++i) {
    const double v = std::pow(10.0, (i + 0.5) / 500.0);
    xs.push_back(v);
    ys.push_back(v * 1000.0);
  }
  CHECK(benford_discrepancy(xs).extreme == doctest::Approx(benford_discrepancy(ys).extreme).epsilon(1e-6));
  CHECK(benford_discrepancy(xs).extreme == doctest::Approx(1.0 / 500.0).epsilon(1e-6));
}
