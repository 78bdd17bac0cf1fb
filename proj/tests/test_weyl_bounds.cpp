#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "benford/errors.hpp"
#include "benford/weyl_bounds.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace benford;

TEST_CASE("frozen bound values") {
  CHECK(lemma_bound(1, 1) == doctest::Approx(1.1591549431).epsilon(1e-10));
  CHECK(lemma_bound(100, 1) == doctest::Approx(31.3830631340).epsilon(1e-10));
  CHECK(lemma_bound(10, 10) == doctest::Approx(73.4969990672).epsilon(1e-10));
  CHECK(van_der_corput_bound(10000, 1) == doctest::Approx(8.050603).epsilon(1e-12));
  CHECK(van_der_corput_bound(10000, 100) == doctest::Approx(1.2109).epsilon(1e-12));
  const RateParams p;
  CHECK(optimal_H(3, p) == 2);
  CHECK(optimal_H(1'000'000, p) == 270);
  CHECK(optimal_H(2, p) == 2);
}

TEST_CASE("rate expression") {
  RateParams p;
  p.C0 = 1e-300;
  p.c0 = 1.0;
  CHECK(theorem1_rhs(1000, p, Schedule::constant(2.0)) == doctest::Approx(0.5831129068).epsilon(1e-9));
  CHECK_THROWS_AS(theorem1_rhs(1, p, Schedule::constant(2.0)), DomainError);
  p.C0 = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("decay exponent") {
  RateParams p;
  p.beta = 3.0;
  CHECK(p.decay_exponent() == 1.0);
  p.beta = 0.5;
  p.delta = 1.0;
  p.theta = 1.0;
  CHECK(p.decay_exponent() == doctest::Approx(-0.5));
}

TEST_CASE("exponential sums stay within the k / (2 pi h) + 1 + pi h ln k bound") {
  for (std::int64_t h = 1; h <= 50; ++h) {
    const auto sums = partial_exponential_sums(5000, h);
    REQUIRE(sums.size() == 5000);
    int violations = 0;
    for (std::int64_t k = 1; k <= 5000; ++k) {
      if (std::abs(sums[static_cast<std::size_t>(k - 1)]) > lemma_bound(k, h)) ++violations;
    }
    CHECK(violations == 0);
    CHECK(std::abs(sums[4999] - partial_exponential_sum(5000, h)) < 1e-9);
  }
  CHECK_THROWS_AS(partial_exponential_sum(0, 1), DomainError);
}

TEST_CASE("uniform characteristic function under the van der Corput bound") {
  // |E e^{2 pi i h ln X}| for X uniform on {1..n} is |S_n(h)| / n.
  int violations = 0;
  for (std::int64_t h = 1; h <= 30; ++h) {
    const auto sums = partial_exponential_sums(3000, h);
    for (std::int64_t n = 1; n <= 3000; ++n) {
      const double modulus = std::abs(sums[static_cast<std::size_t>(n - 1)]) / static_cast<double>(n);
      if (modulus > van_der_corput_bound(n, h)) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("Weyl sums of the powers of two") {
  std::vector<double> u;
  for (int n = 1; n <= 1000; ++n) {
    const double y = n * std::log10(2.0);
    u.push_back(y - std::floor(y));
  }
  const auto sp = SamplePoints::from_unsorted(u);
  CHECK(std::abs(weyl_sum(sp, 1)) == doctest::Approx(1.16035e-4).epsilon(1e-3));
  CHECK(erdos_turan_bound(sp, 31) == doctest::Approx(0.0374677).epsilon(1e-5));
  CHECK_THROWS_AS(weyl_sum(sp, 0), DomainError);
  CHECK_THROWS_AS(erdos_turan_bound(sp, 0), DomainError);
  CHECK_THROWS_AS(erdos_turan_bound(sp, kMaxHarmonics + 1), SizeError);
}

TEST_CASE("Erdos-Turan bound dominates the extreme discrepancy") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> size(1, 400);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> harmonics(1, 40);
  int violations = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> pts(static_cast<std::size_t>(size(gen)));
    // Mix uniform points with clustered ones.
    const double spread = trial % 3 == 0 ? 0.05 : 1.0;
    for (auto& x : pts) x = std::fmod(spread * unif(gen), 1.0);
    const auto sp = SamplePoints::from_unsorted(pts);
    if (extreme_discrepancy(sp) > erdos_turan_bound(sp, harmonics(gen))) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("bound form") {
  RateParams p;
  p.c1 = 8.0;
  p.c2 = 5.0;
  p.gamma = 0.5;
  p.delta = 1.0;
  p.r = Schedule::polynomial(1.0, -0.5);
  CHECK(prop_bound_form(4, 100, p) == doctest::Approx(8.0 / 2.0 + 5.0 * 4.0 / 10.0));
}
