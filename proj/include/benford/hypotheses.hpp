#pragma once

#include "benford/distributions.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace benford {

/// Per-index quantities for the discrete-law (mode based) conditions.
struct Prop2Row {
  std::int64_t n = 0;
  std::int64_t mode = 0;          // last maximiser of the pmf
  double mode_mass = 0.0;         // P[X = m]
  double mode_times_mass = 0.0;   // m P[X = m]
  double mean_inverse = 0.0;      // E[1/X]
  bool unimodal = false;
  std::int64_t support_checked = 0;  // k = 1..support_checked enumerated
};

enum class Prop2Case { case1, case2, undetermined };

struct Prop2Report {
  std::vector<Prop2Row> rows;
  Prop2Case detected = Prop2Case::undetermined;
  double beta = 0.0;  // empirical exponent for the detected case
  // Log-log regression slopes against n.
  double slope_mode = 0.0;
  double slope_mode_mass = 0.0;
  double slope_mode_times_mass = 0.0;
  double slope_mean_inverse = 0.0;
};

/// Throws DomainError for continuous families or an empty grid.
Prop2Report check_prop2_hypotheses(const DistributionSpec& spec, std::span<const std::int64_t> n_grid);

struct Prop3Row {
  std::int64_t n = 0;
  double sup_x_f = 0.0;            // sup |x f(x)|
  double integral_x_fprime = 0.0;  // int |x f'(x)| dx over the open support
  double boundary_x_f = 0.0;       // sum of |x f(x)| at jump points
  double c1 = 0.0;                 // (sup + integral) / 2 pi
  double c1_endpoint = 0.0;        // (boundary + integral) / 2 pi
};

struct Prop3Report {
  std::vector<Prop3Row> rows;
  double c1_max = 0.0;
  double c1_endpoint_max = 0.0;
};

/// Throws DomainError for discrete families or an empty grid.
Prop3Report check_prop3_hypotheses(const DistributionSpec& spec, std::span<const std::int64_t> n_grid);

/// P[X > e^c] + P[X < e^-c], i.e. P[|ln X| > c].
double log_tail_probability(const Law& law, double c);

struct ConditionOneReport {
  std::vector<double> terms;  // P[|ln X_n| > n^alpha], n = 1..n_max
  double partial_sum = 0.0;
  double tail_estimate = 0.0;  // sum of terms with n > n_max / 2
  bool converged = false;      // tail_estimate < 1e-6
};

/// Finite-horizon proxy for summability of P[|ln X_n| > n^alpha]. A
/// heuristic: no finite prefix can prove convergence of the series.
ConditionOneReport check_condition_one(const DistributionSpec& spec, double alpha, std::int64_t n_max);

/// Least-squares slope of ln y against ln x. Requires >= 2 distinct x and
/// positive values.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace benford
