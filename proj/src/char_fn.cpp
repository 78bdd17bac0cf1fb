#include "benford/distributions.hpp"
#include "benford/errors.hpp"
#include "benford/summation.hpp"
#include "overloaded.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace benford {
namespace {

using detail::Overloaded;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxTerms = 1.0e8;
constexpr double kMaxPanels = 2.0e6;

Complex phase_ln(double t, double x) { return unit_phase(t * std::log(x)); }

void validate_query(double t, double tolerance) {
  if (!std::isfinite(t)) throw DomainError("char_fn: frequency t must be finite");
  if (!(tolerance > 0.0 && tolerance <= 1e-2)) {
    throw DomainError("char_fn: tolerance must lie in (0, 1e-2]");
  }
}

// sum_{k>=1} p (1-p)^(k-1) e^{2 pi i t ln k}, truncated once the remaining
// mass (1-p)^K drops below tail_target.
Complex geometric_sum(double p, double t, double tail_target) {
  const double log_q = std::log1p(-p);
  const double terms = std::max(1.0, std::ceil(std::log(tail_target) / log_q));
  if (!(terms <= kMaxTerms)) {
    throw ConvergenceError("char_fn: geometric tail needs more than 1e8 terms (p = " + std::to_string(p) + ")");
  }
  const double q = 1.0 - p;
  const auto k_max = static_cast<std::int64_t>(terms);
  CompensatedComplexSum acc;
  double w = p;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    acc.add(w * phase_ln(t, static_cast<double>(k)));
    w *= q;
  }
  return acc.value();
}

Complex discrete_uniform_sum(const DiscreteUniformLaw& du, double t) {
  const auto count = static_cast<double>(du.b - du.a + 1);
  if (count > kMaxTerms) throw ConvergenceError("char_fn: discrete uniform support exceeds 1e8 points");
  CompensatedComplexSum acc;
  for (std::int64_t k = du.a; k <= du.b; ++k) acc.add(phase_ln(t, static_cast<double>(k)));
  return acc.value() / count;
}

Complex continuous_uniform_closed_form(const ContinuousUniformLaw& u, double t) {
  // (b^{s+1} - a^{s+1}) / ((s+1)(b-a)) with s = 2 pi i t.
  const Complex s1{1.0, kTwoPi * t};
  const Complex num = u.b * phase_ln(t, u.b) - u.a * phase_ln(t, u.a);
  return num / (s1 * (u.b - u.a));
}

// Trapezoid rule for int g(y) e^{2 pi i t y} dy over [lo, hi]. For smooth,
// rapidly decaying g the error is governed by aliasing at 1/step - |t|, so
// it is spectrally small once that gap is a few decay scales wide.
template <class Density>
Complex log_space_trapezoid(Density&& g, double lo, double hi, double t, double step, double tol) {
  auto evaluate = [&](double h) {
    const double cells = std::ceil((hi - lo) / h);
    if (cells > kMaxPanels) throw ConvergenceError("char_fn: log-space grid too fine");
    const auto m = static_cast<std::int64_t>(cells);
    CompensatedComplexSum acc;
    for (std::int64_t i = 0; i <= m; ++i) {
      const double y = lo + static_cast<double>(i) * h;
      acc.add(g(y) * unit_phase(t * y));
    }
    return acc.value() * h;
  };
  Complex coarse = evaluate(step);
  for (int level = 0; level < 6; ++level) {
    step *= 0.5;
    const Complex fine = evaluate(step);
    if (std::abs(fine - coarse) <= 0.5 * tol) return fine;
    coarse = fine;
  }
  throw ConvergenceError("char_fn: log-space trapezoid did not settle");
}

Complex exponential_char_fn(const ExponentialLaw& e, double t, double tol) {
  // Y = ln X has density lambda e^y exp(-lambda e^y).
  const double lo = std::log(tol / (8.0 * e.lambda));
  const double hi = std::log(std::log(8.0 / tol) / e.lambda);
  const double log_lambda = std::log(e.lambda);
  auto g = [&](double y) { return std::exp(y + log_lambda - e.lambda * std::exp(y)); };
  return log_space_trapezoid(g, lo, hi, t, 1.0 / (std::abs(t) + 8.0), tol);
}

Complex frechet_char_fn(const FrechetLaw& f, double t, double tol) {
  // Y = ln X has density alpha exp(-alpha y - e^{-alpha y}).
  const double lo = -std::log(std::log(8.0 / tol)) / f.alpha;
  const double hi = std::log(8.0 / tol) / f.alpha;
  auto g = [&](double y) { return f.alpha * std::exp(-f.alpha * y - std::exp(-f.alpha * y)); };
  return log_space_trapezoid(g, lo, hi, t, 1.0 / (std::abs(t) + 8.0 * std::max(1.0, f.alpha)), tol);
}

// Upper end Y (in ln x) beyond which the power-law integral tail is below
// target: normalizer (n + e^Y)^-eps / eps <= target.
double powerlaw_integral_end(const PowerLawLaw& pl, double target, double start) {
  const double log_x = std::log(pl.normalizer / (pl.eps * target)) / pl.eps;
  if (log_x > 700.0) return log_x;
  const double x = std::exp(log_x) - pl.n;
  return x > std::exp(start) ? std::log(x) : start;
}

// F(x) = normalizer (n + x)^-(1+eps) e^{2 pi i t ln x}.
Complex powerlaw_term(const PowerLawLaw& pl, double t, double x) {
  return pl.normalizer * std::pow(pl.n + x, -(1.0 + pl.eps)) * phase_ln(t, x);
}

// int_K^inf F(x) dx after x = e^y, composite 15-point Gauss-Legendre.
Complex powerlaw_tail_integral(const PowerLawLaw& pl, double t, double k, double tol) {
  const double lo = std::log(k);
  const double hi = powerlaw_integral_end(pl, tol / 16.0, lo);
  if (hi <= lo) return {0.0, 0.0};
  using Rule = boost::math::quadrature::gauss<double, 15>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  auto integrand = [&](double y) {
    const double ey = std::exp(y);
    return pl.normalizer * std::pow(pl.n + ey, -(1.0 + pl.eps)) * ey * unit_phase(t * y);
  };
  auto evaluate = [&](double width) {
    const double panels = std::ceil((hi - lo) / width);
    if (panels > kMaxPanels) throw ConvergenceError("char_fn: power-law tail integral needs too many panels");
    const auto m = static_cast<std::int64_t>(panels);
    const double h = (hi - lo) / panels;
    CompensatedComplexSum acc;
    for (std::int64_t i = 0; i < m; ++i) {
      const double c = lo + (static_cast<double>(i) + 0.5) * h;
      const double r = 0.5 * h;
      Complex panel = w[0] * integrand(c);
      for (std::size_t j = 1; j < x.size(); ++j) {
        panel += w[j] * (integrand(c - r * x[j]) + integrand(c + r * x[j]));
      }
      acc.add(r * panel);
    }
    return acc.value();
  };
  double width = std::min(0.5, 0.5 / std::max(std::abs(t), 1e-300));
  Complex coarse = evaluate(width);
  for (int level = 0; level < 5; ++level) {
    width *= 0.5;
    const Complex fine = evaluate(width);
    if (std::abs(fine - coarse) <= tol / 8.0) return fine;
    coarse = fine;
  }
  throw ConvergenceError("char_fn: power-law tail integral did not settle");
}

// Direct summation to K, then Euler-Maclaurin for the tail with two
// derivative corrections. K is a multiple of the phase/decay scale of F so
// the remainder is far below the tolerance.
Complex powerlaw_char_fn(const PowerLawLaw& pl, double t, double tol) {
  const double s1 = 1.0 + pl.eps;
  const double scale = kTwoPi * std::abs(t) + s1;
  const double k = std::max(64.0, std::ceil(20.0 * scale));
  if (k > kMaxTerms) throw ConvergenceError("char_fn: power-law frequency too large");

  CompensatedComplexSum acc;
  const auto k_max = static_cast<std::int64_t>(k);
  for (std::int64_t j = 1; j <= k_max; ++j) acc.add(powerlaw_term(pl, t, static_cast<double>(j)));

  const Complex s{0.0, kTwoPi * t};
  const double nk = pl.n + k;
  const Complex g1 = -s1 / nk + s / k;
  const Complex g2 = s1 / (nk * nk) - s / (k * k);
  const Complex g3 = -2.0 * s1 / (nk * nk * nk) + 2.0 * s / (k * k * k);
  const Complex fk = powerlaw_term(pl, t, k);
  const Complex d1 = fk * g1;
  const Complex d3 = fk * (g3 + 3.0 * g1 * g2 + g1 * g1 * g1);

  const Complex tail = powerlaw_tail_integral(pl, t, k, tol) - 0.5 * fk - d1 / 12.0 + d3 / 720.0;
  return acc.value() + tail;
}

// 31-point Kronrod against 15-point Gauss on [a, b]. Written out rather
// than calling gauss_kronrod::integrate, whose reported error is not
// rescaled to the interval.
template <class Integrand>
double gk31(const Integrand& f, double a, double b, double* error, double* l1) {
  using K = boost::math::quadrature::gauss_kronrod<double, 31>;
  using G = boost::math::quadrature::gauss<double, 15>;
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  const auto& kx = K::abscissa();
  const auto& kw = K::weights();
  const double f0 = f(c);
  double kron = kw[0] * f0;
  double abs_sum = kw[0] * std::abs(f0);
  for (std::size_t i = 1; i < kx.size(); ++i) {
    const double fp = f(c + r * kx[i]);
    const double fm = f(c - r * kx[i]);
    kron += kw[i] * (fp + fm);
    abs_sum += kw[i] * (std::abs(fp) + std::abs(fm));
  }
  const auto& gx = G::abscissa();
  const auto& gw = G::weights();
  double gauss = gw[0] * f0;
  for (std::size_t i = 1; i < gx.size(); ++i) gauss += gw[i] * (f(c + r * gx[i]) + f(c - r * gx[i]));
  *error = r * std::abs(kron - gauss);
  *l1 = r * abs_sum;
  return r * kron;
}

// Bisection against an absolute error target, floored at the rounding level
// of the integrand.
template <class Integrand>
double gk_absolute(const Integrand& f, double a, double b, double abs_tol, int depth, double* error) {
  double err = 0.0;
  double l1 = 0.0;
  const double value = gk31(f, a, b, &err, &l1);
  if (err <= std::max(abs_tol, 1e-13 * l1) || depth == 0) {
    *error += err;
    return value;
  }
  const double mid = 0.5 * (a + b);
  return gk_absolute(f, a, mid, 0.5 * abs_tol, depth - 1, error) +
         gk_absolute(f, mid, b, 0.5 * abs_tol, depth - 1, error);
}

// Complex integral of amp(x) e^{2 pi i t phase(x)} over the given cells.
template <class Amp, class Phase>
Complex oscillatory_cells(const Amp& amp, const Phase& phase, double t, const std::vector<double>& edges,
                          double abs_tol, double* error) {
  const double span = edges.back() - edges.front();
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double cell_tol = 0.5 * abs_tol * (edges[i + 1] - edges[i]) / span;
    const double re = gk_absolute([&](double x) { return amp(x) * unit_phase(t * phase(x)).real(); }, edges[i],
                                  edges[i + 1], cell_tol, 8, error);
    const double im = gk_absolute([&](double x) { return amp(x) * unit_phase(t * phase(x)).imag(); }, edges[i],
                                  edges[i + 1], cell_tol, 8, error);
    acc.add({re, im});
  }
  return acc.value();
}

// Cells on [lo, hi] split geometrically so the phase 2 pi t ln x advances by
// at most pi per cell.
template <class Density>
Complex x_space_quadrature(Density&& f, double lo, double hi, double t, double abs_tol, double* error) {
  const double cells = std::ceil(std::log(hi / lo) * 2.0 * std::abs(t));
  if (!(cells <= kMaxPanels)) throw ConvergenceError("char_fn_oracle: too many oscillation cells");
  std::vector<double> edges{lo};
  const double ratio = std::exp(1.0 / (2.0 * std::abs(t)));
  while (edges.back() < hi) edges.push_back(std::min(edges.back() * ratio, hi));
  return oscillatory_cells(f, [](double x) { return std::log(x); }, t, edges, abs_tol, error);
}

Complex powerlaw_oracle_sum(const PowerLawLaw& pl, double t, double tol, double* error) {
  const double s1 = 1.0 + pl.eps;
  const double scale = kTwoPi * std::abs(t) + s1;
  // First-order Euler-Maclaurin: the neglected F'(K)/12 is bounded by
  // normalizer * scale * K^-(2+eps) / 12.
  const double k_deriv = std::pow(pl.normalizer * scale / (6.0 * tol), 1.0 / (2.0 + pl.eps));
  const double k = std::ceil(std::max({1000.0, 20.0 * scale, k_deriv}));
  if (k > 5.0e7) throw ConvergenceError("char_fn_oracle: power-law direct sum exceeds guard");

  CompensatedComplexSum acc;
  const auto k_max = static_cast<std::int64_t>(k);
  for (std::int64_t j = 1; j <= k_max; ++j) acc.add(powerlaw_term(pl, t, static_cast<double>(j)));

  const double lo = std::log(k);
  const double hi = powerlaw_integral_end(pl, tol / 4.0, lo);
  const double width = std::min(1.0, 0.5 / std::max(std::abs(t), 1e-300));
  if (!((hi - lo) / width <= kMaxPanels)) throw ConvergenceError("char_fn_oracle: power-law tail too long");
  std::vector<double> edges{lo};
  while (edges.back() < hi) edges.push_back(std::min(edges.back() + width, hi));
  auto amp = [&](double y) {
    const double ey = std::exp(y);
    return pl.normalizer * std::pow(pl.n + ey, -s1) * ey;
  };
  acc.add(oscillatory_cells(amp, [](double y) { return y; }, t, edges, tol / 4.0, error));
  acc.add(-0.5 * powerlaw_term(pl, t, k));
  *error += tol / 4.0;
  return acc.value();
}

}  // namespace

Complex char_fn(const Law& law, double t, double tolerance) {
  validate_query(t, tolerance);
  if (t == 0.0) return {1.0, 0.0};
  return std::visit(
      Overloaded{
          [&](const GeometricLaw& g) { return geometric_sum(g.p, t, 0.5 * tolerance); },
          [&](const PowerLawLaw& pl) { return powerlaw_char_fn(pl, t, tolerance); },
          [&](const DiscreteUniformLaw& du) { return discrete_uniform_sum(du, t); },
          [&](const ExponentialLaw& e) { return exponential_char_fn(e, t, tolerance); },
          [&](const FrechetLaw& f) { return frechet_char_fn(f, t, tolerance); },
          [&](const ContinuousUniformLaw& u) { return continuous_uniform_closed_form(u, t); },
          [&](const PointMassLaw& pm) { return phase_ln(t, pm.value); },
      },
      law);
}

Complex char_fn(const DistributionSpec& spec, const CharFnQuery& q) {
  return char_fn(resolve(spec, q.n), q.t, q.tolerance);
}

CharFnOracleResult char_fn_oracle(const Law& law, double t, double tolerance, const OracleOptions& options) {
  validate_query(t, tolerance);
  CharFnOracleResult out;
  if (t == 0.0) {
    out.value = {1.0, 0.0};
    out.mc_mean = {1.0, 0.0};
    out.mc_draws = options.mc_draws;
    return out;
  }

  double error = 0.0;
  out.value = std::visit(
      Overloaded{
          [&](const GeometricLaw& g) { return geometric_sum(g.p, t, 0.1 * tolerance); },
          [&](const PowerLawLaw& pl) { return powerlaw_oracle_sum(pl, t, 0.1 * tolerance, &error); },
          [&](const DiscreteUniformLaw& du) { return discrete_uniform_sum(du, t); },
          [&](const ExponentialLaw& e) {
            const double lo = tolerance / (40.0 * e.lambda);
            const double hi = std::log(40.0 / tolerance) / e.lambda;
            auto f = [&](double x) { return e.lambda * std::exp(-e.lambda * x); };
            return x_space_quadrature(f, lo, hi, t, 0.1 * tolerance, &error);
          },
          [&](const FrechetLaw& fr) {
            const double lo = std::pow(std::log(40.0 / tolerance), -1.0 / fr.alpha);
            const double hi = std::pow(40.0 / tolerance, 1.0 / fr.alpha);
            auto f = [&](double x) {
              const double u = std::pow(x, -fr.alpha);
              return fr.alpha * u / x * std::exp(-u);
            };
            return x_space_quadrature(f, lo, hi, t, 0.1 * tolerance, &error);
          },
          [&](const ContinuousUniformLaw& u) {
            const double density = 1.0 / (u.b - u.a);
            return x_space_quadrature([&](double) { return density; }, u.a, u.b, t, 0.1 * tolerance, &error);
          },
          [&](const PointMassLaw& pm) { return phase_ln(t, pm.value); },
      },
      law);
  out.error_estimate = error;
  if (error > 0.25 * tolerance) {
    throw ConvergenceError("char_fn_oracle: quadrature error estimate " + std::to_string(error) +
                           " exceeds tolerance / 4");
  }

  if (options.mc_draws > 0) {
    Rng rng(options.mc_seed);
    CompensatedComplexSum acc;
    for (std::size_t i = 0; i < options.mc_draws; ++i) acc.add(phase_ln(t, sample(law, rng)));
    const auto m = static_cast<double>(options.mc_draws);
    out.mc_mean = acc.value() / m;
    out.mc_draws = options.mc_draws;
    // |e^{i phi}| = 1, so the sample variance is 1 - |mean|^2.
    if (options.mc_draws > 1) {
      const double var = std::max(0.0, 1.0 - std::norm(out.mc_mean)) * m / (m - 1.0);
      out.mc_standard_error = std::sqrt(var / m);
    }
  }
  return out;
}

CharFnOracleResult char_fn_oracle(const DistributionSpec& spec, const CharFnQuery& q, const OracleOptions& options) {
  return char_fn_oracle(resolve(spec, q.n), q.t, q.tolerance, options);
}

}  // namespace benford
