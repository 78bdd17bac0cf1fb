#include "benford/distributions.hpp"

#include "benford/errors.hpp"
#include "overloaded.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace benford {
namespace {

using detail::Overloaded;

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames = {{
    {Family::geometric, "geometric"},
    {Family::power_law, "powerlaw"},
    {Family::discrete_uniform, "uniform-disc"},
    {Family::exponential, "exponential"},
    {Family::frechet, "frechet"},
    {Family::continuous_uniform, "uniform-cont"},
    {Family::point_mass, "point-mass"},
}};

std::int64_t as_integer(double v, const char* what) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || std::abs(r) > 9.0e15) {
    throw DomainError(std::string(what) + " must be an integer");
  }
  return static_cast<std::int64_t>(r);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

// Smallest k >= 1 with survival(k) <= v, where survival(0) = 1.
template <class Survival>
double invert_survival(double v, double guess, Survival&& surv) {
  if (!(guess <= 1e15)) return std::isnan(guess) ? 1.0 : std::round(std::min(guess, 1e300));
  std::int64_t k = guess < 1.0 ? 1 : static_cast<std::int64_t>(std::llround(guess));
  std::int64_t lo;
  std::int64_t hi;
  if (surv(k) <= v) {
    hi = k;
    std::int64_t step = 1;
    lo = k - step;
    while (lo > 0 && surv(lo) <= v) {
      hi = lo;
      step *= 2;
      lo = std::max<std::int64_t>(0, hi - step);
    }
  } else {
    lo = k;
    std::int64_t step = 1;
    hi = k + step;
    while (surv(hi) > v) {
      lo = hi;
      step *= 2;
      if (step > (std::int64_t{1} << 52)) return static_cast<double>(hi);
      hi = lo + step;
    }
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (surv(mid) <= v) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<double>(hi);
}

double powerlaw_survival(const PowerLawLaw& law, double k) {
  if (k < 1.0) return 1.0;
  return std::min(1.0, law.normalizer * hurwitz_tail(1.0 + law.eps, law.n + std::floor(k) + 1.0));
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, known] : kFamilyNames) {
    if (known == name) return family;
  }
  throw ConfigError("unknown distribution family '" + std::string(name) + "'");
}

bool is_discrete(Family f) noexcept {
  return f == Family::geometric || f == Family::power_law || f == Family::discrete_uniform;
}

DistributionSpec DistributionSpec::geometric(Schedule p) {
  DistributionSpec s;
  s.family = Family::geometric;
  s.p = std::move(p);
  return s;
}

DistributionSpec DistributionSpec::power_law(Schedule eps) {
  DistributionSpec s;
  s.family = Family::power_law;
  s.eps = std::move(eps);
  return s;
}

DistributionSpec DistributionSpec::discrete_uniform(Schedule a, Schedule b) {
  DistributionSpec s;
  s.family = Family::discrete_uniform;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

DistributionSpec DistributionSpec::exponential(Schedule lambda) {
  DistributionSpec s;
  s.family = Family::exponential;
  s.lambda = std::move(lambda);
  return s;
}

DistributionSpec DistributionSpec::frechet(Schedule alpha) {
  DistributionSpec s;
  s.family = Family::frechet;
  s.alpha = std::move(alpha);
  return s;
}

DistributionSpec DistributionSpec::continuous_uniform(Schedule a, Schedule b) {
  DistributionSpec s;
  s.family = Family::continuous_uniform;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

DistributionSpec DistributionSpec::point_mass(Schedule value) {
  DistributionSpec s;
  s.family = Family::point_mass;
  s.value = std::move(value);
  return s;
}

double hurwitz_tail(double s, double m) {
  if (!(s > 1.0) || !(m >= 1.0) || !std::isfinite(s)) {
    throw DomainError("hurwitz_tail: requires s > 1 and m >= 1");
  }
  if (!std::isfinite(m)) return 0.0;
  const double start = std::max(32.0, 2.0 * s + 8.0);
  const double x = m < start ? m + std::ceil(start - m) : m;
  // Euler-Maclaurin remainder for sum_{k >= 0} (x + k)^-s.
  const double xs = std::pow(x, -s);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double tail = x * xs / (s - 1.0) + 0.5 * xs;
  tail += s * xs * inv / 12.0;
  tail -= s * (s + 1.0) * (s + 2.0) * xs * inv * inv2 / 720.0;
  tail += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * xs * inv * inv2 * inv2 / 30240.0;
  tail -= s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * (s + 5.0) * (s + 6.0) * xs * inv * inv2 * inv2 * inv2 /
          1209600.0;
  // Direct prefix, smallest terms first.
  double acc = tail;
  for (double k = x - 1.0; k >= m; k -= 1.0) acc += std::pow(k, -s);
  return acc;
}

double powerlaw_normalizer(std::int64_t n, double eps) {
  if (n < 1) throw DomainError("powerlaw_normalizer: n must be >= 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("powerlaw_normalizer: eps must be positive");
  const double total = hurwitz_tail(1.0 + eps, static_cast<double>(n) + 1.0);
  const double alpha = 1.0 / total;
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw ConvergenceError("powerlaw_normalizer: tail sum underflowed");
  }
  return alpha;
}

Law resolve(const DistributionSpec& spec, std::int64_t n) {
  if (n < 1) throw DomainError("distribution index n must be >= 1");
  switch (spec.family) {
    case Family::geometric: {
      const double p = spec.p(n);
      require(p > 0.0 && p < 1.0, "geometric: p_n must lie in (0, 1)");
      return GeometricLaw{p};
    }
    case Family::power_law: {
      const double eps = spec.eps(n);
      require(eps > 0.0 && std::isfinite(eps), "powerlaw: eps must be positive");
      return PowerLawLaw{static_cast<double>(n), eps, powerlaw_normalizer(n, eps)};
    }
    case Family::discrete_uniform: {
      const auto a = as_integer(spec.a(n), "uniform-disc: a_n");
      const auto b = as_integer(spec.b(n), "uniform-disc: b_n");
      if (a == b && spec.degenerate_as_point_mass && a >= 1) {
        return PointMassLaw{static_cast<double>(a)};
      }
      require(a >= 1 && a < b, "uniform-disc: requires integers 1 <= a_n < b_n");
      return DiscreteUniformLaw{a, b};
    }
    case Family::exponential: {
      const double lambda = spec.lambda(n);
      require(lambda > 0.0 && std::isfinite(lambda), "exponential: lambda_n must be positive");
      return ExponentialLaw{lambda};
    }
    case Family::frechet: {
      const double alpha = spec.alpha(n);
      require(alpha > 0.0 && std::isfinite(alpha), "frechet: alpha_n must be positive");
      return FrechetLaw{alpha};
    }
    case Family::continuous_uniform: {
      const double a = spec.a(n);
      const double b = spec.b(n);
      if (a == b && spec.degenerate_as_point_mass && a > 0.0) return PointMassLaw{a};
      require(a > 0.0 && a < b && std::isfinite(b), "uniform-cont: requires 0 < a_n < b_n");
      return ContinuousUniformLaw{a, b};
    }
    case Family::point_mass: {
      const double v = spec.value(n);
      require(v > 0.0 && std::isfinite(v), "point-mass: value must be positive");
      return PointMassLaw{v};
    }
  }
  throw DomainError("unknown family");
}

double sample(const Law& law, Rng& rng) {
  return std::visit(
      Overloaded{
          [&](const GeometricLaw& g) {
            return 1.0 + std::floor(std::log(rng.uniform_open()) / std::log1p(-g.p));
          },
          [&](const PowerLawLaw& pl) {
            const double v = rng.uniform_open();
            // Continuous approximation of the survival function seeds the
            // integer search.
            const double guess = std::pow(pl.normalizer / (pl.eps * v), 1.0 / pl.eps) - pl.n - 0.5;
            return invert_survival(v, guess, [&](std::int64_t k) {
              return powerlaw_survival(pl, static_cast<double>(k));
            });
          },
          [&](const DiscreteUniformLaw& du) {
            const auto width = static_cast<double>(du.b - du.a + 1);
            const double k = std::floor(rng.uniform_open() * width);
            return static_cast<double>(du.a) + std::min(k, width - 1.0);
          },
          [&](const ExponentialLaw& e) { return -std::log(rng.uniform_open()) / e.lambda; },
          [&](const FrechetLaw& f) { return std::pow(-std::log(rng.uniform_open()), -1.0 / f.alpha); },
          [&](const ContinuousUniformLaw& u) {
            const double x = u.a + (u.b - u.a) * rng.uniform_open();
            return std::min(std::max(x, u.a), u.b);
          },
          [&](const PointMassLaw& pm) { return pm.value; },
      },
      law);
}

double sample(const DistributionSpec& spec, std::int64_t n, Rng& rng) { return sample(resolve(spec, n), rng); }

double survival(const Law& law, double x) {
  if (std::isnan(x)) throw DomainError("survival: NaN argument");
  return std::visit(
      Overloaded{
          [&](const GeometricLaw& g) {
            if (x < 1.0) return 1.0;
            if (std::isinf(x)) return 0.0;
            return std::exp(std::floor(x) * std::log1p(-g.p));
          },
          [&](const PowerLawLaw& pl) {
            if (std::isinf(x)) return 0.0;
            return powerlaw_survival(pl, x);
          },
          [&](const DiscreteUniformLaw& du) {
            const auto a = static_cast<double>(du.a);
            const auto b = static_cast<double>(du.b);
            if (x < a) return 1.0;
            if (x >= b) return 0.0;
            return (b - std::floor(x)) / (b - a + 1.0);
          },
          [&](const ExponentialLaw& e) { return x <= 0.0 ? 1.0 : std::exp(-e.lambda * x); },
          [&](const FrechetLaw& f) { return x <= 0.0 ? 1.0 : -std::expm1(-std::pow(x, -f.alpha)); },
          [&](const ContinuousUniformLaw& u) {
            if (x <= u.a) return 1.0;
            if (x >= u.b) return 0.0;
            return (u.b - x) / (u.b - u.a);
          },
          [&](const PointMassLaw& pm) { return x < pm.value ? 1.0 : 0.0; },
      },
      law);
}

double cdf(const Law& law, double x) {
  return std::visit(
      Overloaded{
          [&](const ExponentialLaw& e) { return x <= 0.0 ? 0.0 : -std::expm1(-e.lambda * x); },
          [&](const FrechetLaw& f) { return x <= 0.0 ? 0.0 : std::exp(-std::pow(x, -f.alpha)); },
          [&](const auto&) { return 1.0 - survival(law, x); },
      },
      law);
}

double pmf(const Law& law, std::int64_t k) {
  return std::visit(
      Overloaded{
          [&](const GeometricLaw& g) {
            return k < 1 ? 0.0 : g.p * std::exp(static_cast<double>(k - 1) * std::log1p(-g.p));
          },
          [&](const PowerLawLaw& pl) {
            return k < 1 ? 0.0 : pl.normalizer * std::pow(pl.n + static_cast<double>(k), -(1.0 + pl.eps));
          },
          [&](const DiscreteUniformLaw& du) {
            return (k < du.a || k > du.b) ? 0.0 : 1.0 / static_cast<double>(du.b - du.a + 1);
          },
          [&](const PointMassLaw& pm) { return static_cast<double>(k) == pm.value ? 1.0 : 0.0; },
          [&](const auto&) { return 0.0; },
      },
      law);
}

}  // namespace benford
