#include "benford/hypotheses.hpp"

#include "benford/errors.hpp"
#include "benford/summation.hpp"
#include "overloaded.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace benford {
namespace {

using detail::Overloaded;

constexpr std::int64_t kMaxSupport = 1'000'000;
constexpr double kNegligibleMass = 1e-13;
constexpr double kBoundedSlope = 0.05;

void require_grid(std::span<const std::int64_t> n_grid, const char* who) {
  if (n_grid.empty()) throw DomainError(std::string(who) + ": empty n grid");
  for (auto n : n_grid) {
    if (n < 1) throw DomainError(std::string(who) + ": grid indices must be >= 1");
  }
}

// Smallest power-of-two bound K with P[X > K] below the negligible level,
// capped at kMaxSupport.
std::int64_t effective_support(const Law& law) {
  if (const auto* du = std::get_if<DiscreteUniformLaw>(&law)) return std::min(du->b, kMaxSupport);
  std::int64_t k = 16;
  while (k < kMaxSupport && survival(law, static_cast<double>(k)) > kNegligibleMass) k *= 2;
  return std::min(k, kMaxSupport);
}

Prop2Row prop2_row(const Law& law, std::int64_t n) {
  Prop2Row row;
  row.n = n;
  row.support_checked = effective_support(law);
  std::vector<double> mass(static_cast<std::size_t>(row.support_checked));
  CompensatedSum inverse;
  for (std::int64_t k = 1; k <= row.support_checked; ++k) {
    const double p = pmf(law, k);
    mass[static_cast<std::size_t>(k - 1)] = p;
    inverse.add(p / static_cast<double>(k));
  }
  // Mass beyond the enumerated range contributes at most S(K)/K.
  row.mean_inverse = inverse.value();

  std::size_t mode = 0;
  for (std::size_t i = 1; i < mass.size(); ++i) {
    if (mass[i] >= mass[mode]) mode = i;
  }
  row.mode = static_cast<std::int64_t>(mode) + 1;
  row.mode_mass = mass[mode];
  row.mode_times_mass = static_cast<double>(row.mode) * row.mode_mass;

  auto close_or = [](double lhs, double rhs) { return lhs <= rhs * (1.0 + 1e-12); };
  bool ok = true;
  for (std::size_t i = 1; i <= mode && ok; ++i) ok = close_or(mass[i - 1], mass[i]);
  for (std::size_t i = mode + 1; i < mass.size() && ok; ++i) ok = close_or(mass[i], mass[i - 1]);
  row.unimodal = ok;
  return row;
}

double frechet_integral_x_fprime(double alpha) {
  // With u = x^-alpha, |x f'(x)| dx becomes e^-u |alpha u - alpha - 1| du.
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double u0 = (alpha + 1.0) / alpha;
  auto g = [alpha](double u) { return std::exp(-u) * std::abs(alpha * u - alpha - 1.0); };
  const double inner = GK::integrate(g, 0.0, u0, 15, 1e-13);
  const double outer = GK::integrate(g, u0, std::numeric_limits<double>::infinity(), 15, 1e-13);
  return inner + outer;
}

Prop3Row prop3_row(const Law& law, std::int64_t n) {
  Prop3Row row;
  row.n = n;
  std::visit(Overloaded{
                 [&](const ExponentialLaw&) {
                   // x f(x) = u e^-u with u = lambda x: scale free.
                   row.sup_x_f = std::exp(-1.0);
                   row.integral_x_fprime = 1.0;
                   row.boundary_x_f = 0.0;
                 },
                 [&](const FrechetLaw& f) {
                   row.sup_x_f = f.alpha * std::exp(-1.0);
                   row.integral_x_fprime = frechet_integral_x_fprime(f.alpha);
                   row.boundary_x_f = 0.0;
                 },
                 [&](const ContinuousUniformLaw& u) {
                   row.sup_x_f = u.b / (u.b - u.a);
                   row.integral_x_fprime = 0.0;
                   row.boundary_x_f = (u.a + u.b) / (u.b - u.a);
                 },
                 [&](const auto&) { throw DomainError("check_prop3_hypotheses: continuous family required"); },
             },
             law);
  row.c1 = (row.sup_x_f + row.integral_x_fprime) / (2.0 * std::numbers::pi);
  row.c1_endpoint = (row.boundary_x_f + row.integral_x_fprime) / (2.0 * std::numbers::pi);
  return row;
}

}  // namespace

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("loglog_slope: need >= 2 paired values");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) throw DomainError("loglog_slope: values must be positive");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw DomainError("loglog_slope: x values must not all coincide");
  return sxy / sxx;
}

Prop2Report check_prop2_hypotheses(const DistributionSpec& spec, std::span<const std::int64_t> n_grid) {
  if (!is_discrete(spec.family) || spec.family == Family::point_mass) {
    throw DomainError("check_prop2_hypotheses: discrete family required");
  }
  require_grid(n_grid, "check_prop2_hypotheses");
  Prop2Report report;
  std::vector<double> ns, modes, masses, products, inverses;
  for (auto n : n_grid) {
    const Prop2Row row = prop2_row(resolve(spec, n), n);
    report.rows.push_back(row);
    ns.push_back(static_cast<double>(n));
    modes.push_back(static_cast<double>(row.mode));
    masses.push_back(row.mode_mass);
    products.push_back(row.mode_times_mass);
    inverses.push_back(row.mean_inverse);
  }

  const bool spread = std::adjacent_find(ns.begin(), ns.end(), std::not_equal_to<>()) != ns.end();
  if (!spread) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    report.slope_mode = report.slope_mode_mass = report.slope_mode_times_mass = report.slope_mean_inverse = nan;
    return report;
  }
  report.slope_mode = loglog_slope(ns, modes);
  report.slope_mode_mass = loglog_slope(ns, masses);
  report.slope_mode_times_mass = loglog_slope(ns, products);
  report.slope_mean_inverse = loglog_slope(ns, inverses);

  if (report.slope_mode > kBoundedSlope && std::abs(report.slope_mode_times_mass) < kBoundedSlope) {
    report.detected = Prop2Case::case1;
    report.beta = report.slope_mode;
  } else if (std::abs(report.slope_mode) < kBoundedSlope && report.slope_mode_mass < -kBoundedSlope &&
             report.slope_mean_inverse < -kBoundedSlope) {
    report.detected = Prop2Case::case2;
    report.beta = std::min(-report.slope_mode_mass, -report.slope_mean_inverse);
  }
  return report;
}

Prop3Report check_prop3_hypotheses(const DistributionSpec& spec, std::span<const std::int64_t> n_grid) {
  if (is_discrete(spec.family)) throw DomainError("check_prop3_hypotheses: continuous family required");
  require_grid(n_grid, "check_prop3_hypotheses");
  Prop3Report report;
  for (auto n : n_grid) {
    report.rows.push_back(prop3_row(resolve(spec, n), n));
    report.c1_max = std::max(report.c1_max, report.rows.back().c1);
    report.c1_endpoint_max = std::max(report.c1_endpoint_max, report.rows.back().c1_endpoint);
  }
  return report;
}

double log_tail_probability(const Law& law, double c) {
  if (!(c >= 0.0)) throw DomainError("log_tail_probability: c must be >= 0");
  const double upper = survival(law, std::exp(c));
  const double below = std::nextafter(std::exp(-c), 0.0);
  return upper + cdf(law, below);
}

ConditionOneReport check_condition_one(const DistributionSpec& spec, double alpha, std::int64_t n_max) {
  if (!(alpha > 0.0)) throw DomainError("check_condition_one: alpha must be positive");
  if (n_max < 2) throw DomainError("check_condition_one: n_max must be >= 2");
  ConditionOneReport report;
  CompensatedSum total;
  CompensatedSum tail;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double term = log_tail_probability(resolve(spec, n), std::pow(static_cast<double>(n), alpha));
    report.terms.push_back(term);
    total.add(term);
    if (2 * n > n_max) tail.add(term);
  }
  report.partial_sum = total.value();
  report.tail_estimate = tail.value();
  report.converged = report.tail_estimate < 1e-6;
  return report;
}

}  // namespace benford
