#pragma once

#include "benford/rng.hpp"
#include "benford/schedule.hpp"

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace benford {

using Complex = std::complex<double>;

enum class Family {
  geometric,
  power_law,
  discrete_uniform,
  exponential,
  frechet,
  continuous_uniform,
  point_mass,  // degenerate X_n = value_n, used as a test double
};

/// CLI spelling: geometric, powerlaw, uniform-disc, exponential, frechet,
/// uniform-cont, point-mass.
std::string_view family_name(Family f) noexcept;
/// Throws ConfigError for unknown names.
Family parse_family(std::string_view name);
bool is_discrete(Family f) noexcept;

/// Family of X_n plus the index-dependent parameter schedules it reads.
/// Only the schedules relevant to `family` are consulted.
struct DistributionSpec {
  Family family = Family::continuous_uniform;
  Schedule p = Schedule::constant(0.5);              // geometric success probability
  Schedule eps = Schedule::constant(1.0);            // power-law exponent excess
  Schedule a = Schedule::constant(1.0);              // uniform lower end
  Schedule b = Schedule::polynomial(1.0, 1.0);       // uniform upper end
  Schedule lambda = Schedule::constant(1.0);         // exponential rate
  Schedule alpha = Schedule::constant(2.0);          // Frechet shape
  Schedule value = Schedule::constant(1.0);          // point mass location
  // Uniform laws with a_n == b_n collapse to a point mass instead of
  // failing validation (uniform on [1, n] at n = 1).
  bool degenerate_as_point_mass = false;

  static DistributionSpec geometric(Schedule p);
  static DistributionSpec power_law(Schedule eps);
  static DistributionSpec discrete_uniform(Schedule a, Schedule b);
  static DistributionSpec exponential(Schedule lambda);
  static DistributionSpec frechet(Schedule alpha);
  static DistributionSpec continuous_uniform(Schedule a, Schedule b);
  static DistributionSpec point_mass(Schedule value);
};

// Laws with parameters fixed at a given index n.

/// P[X = k] = p (1 - p)^(k - 1), k >= 1.
struct GeometricLaw {
  double p;
  auto operator<=>(const GeometricLaw&) const = default;
};
/// P[X = k] = normalizer / (n + k)^(1 + eps), k >= 1.
struct PowerLawLaw {
  double n;
  double eps;
  double normalizer;
  auto operator<=>(const PowerLawLaw&) const = default;
};
struct DiscreteUniformLaw {
  std::int64_t a;
  std::int64_t b;
  auto operator<=>(const DiscreteUniformLaw&) const = default;
};
struct ExponentialLaw {
  double lambda;
  auto operator<=>(const ExponentialLaw&) const = default;
};
/// CDF e^{-x^-alpha} on x > 0.
struct FrechetLaw {
  double alpha;
  auto operator<=>(const FrechetLaw&) const = default;
};
struct ContinuousUniformLaw {
  double a;
  double b;
  auto operator<=>(const ContinuousUniformLaw&) const = default;
};
struct PointMassLaw {
  double value;
  auto operator<=>(const PointMassLaw&) const = default;
};

using Law = std::variant<GeometricLaw, PowerLawLaw, DiscreteUniformLaw, ExponentialLaw, FrechetLaw,
                         ContinuousUniformLaw, PointMassLaw>;

/// Evaluates the schedules at n and validates the family invariants.
/// Throws DomainError for invalid parameters.
Law resolve(const DistributionSpec& spec, std::int64_t n);

double sample(const Law& law, Rng& rng);
/// One draw of X_n.
double sample(const DistributionSpec& spec, std::int64_t n, Rng& rng);

/// P[X <= x].
double cdf(const Law& law, double x);
/// P[X > x], computed without cancellation in the far tail.
double survival(const Law& law, double x);
/// P[X = k]; zero for continuous laws.
double pmf(const Law& law, std::int64_t k);

/// 1 / sum_{k >= 1} (n + k)^-(1 + eps).
double powerlaw_normalizer(std::int64_t n, double eps);

/// sum_{k >= 0} (m + k)^-s for s > 1, m >= 1 (Euler-Maclaurin tail after a
/// short direct prefix).
double hurwitz_tail(double s, double m);

/// Frequency t multiplies the natural logarithm: E[e^{2 pi i t ln X_n}].
/// Base-10 callers use t = h d_n / ln 10.
struct CharFnQuery {
  double t = 0.0;
  std::int64_t n = 1;
  double tolerance = 1e-8;  // absolute, in (0, 1e-2]
};

Complex char_fn(const Law& law, double t, double tolerance);
/// Closed form where one exists, otherwise spectrally accurate quadrature
/// in log space or accelerated summation. Throws ConvergenceError when the
/// tolerance cannot be certified.
Complex char_fn(const DistributionSpec& spec, const CharFnQuery& q);

struct OracleOptions {
  std::size_t mc_draws = 1'000'000;
  std::uint64_t mc_seed = 0x5eedULL;
};

struct CharFnOracleResult {
  Complex value;
  double error_estimate = 0.0;
  Complex mc_mean;
  double mc_standard_error = 0.0;
  std::size_t mc_draws = 0;
};

/// Independent evaluation: adaptive Gauss-Kronrod in x space split on a
/// geometric grid matched to the oscillation (continuous laws), plain
/// summation with a stricter tail target (discrete laws), plus a Monte
/// Carlo estimate when mc_draws > 0.
CharFnOracleResult char_fn_oracle(const DistributionSpec& spec, const CharFnQuery& q,
                                  const OracleOptions& options = {});
CharFnOracleResult char_fn_oracle(const Law& law, double t, double tolerance,
                                  const OracleOptions& options = {});

}  // namespace benford
