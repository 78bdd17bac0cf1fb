#include "benford/simulation.hpp"

#include "benford/errors.hpp"
#include "benford/stats.hpp"
#include "benford/summation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <string>
#include <thread>

namespace benford {

void ExperimentConfig::validate() const {
  if (N < 1) throw ConfigError("ExperimentConfig: N must be >= 1");
  if (replicates < 1) throw ConfigError("ExperimentConfig: replicates must be >= 1");
  if (!(eta > 0.0)) throw ConfigError("ExperimentConfig: eta must be positive");
  if (H_max < 1) throw ConfigError("ExperimentConfig: H_max must be >= 1");
  const auto cks = effective_checkpoints();
  for (std::size_t i = 0; i < cks.size(); ++i) {
    if (cks[i] < 2 || cks[i] > N) throw ConfigError("ExperimentConfig: checkpoints must lie in [2, N]");
    if (i > 0 && cks[i] <= cks[i - 1]) throw ConfigError("ExperimentConfig: checkpoints must be strictly increasing");
  }
  if (!replicate_seeds.empty()) {
    if (static_cast<std::int64_t>(replicate_seeds.size()) != replicates) {
      throw ConfigError("ExperimentConfig: replicate_seeds needs one entry per replicate");
    }
    const std::set<std::uint64_t> distinct(replicate_seeds.begin(), replicate_seeds.end());
    if (distinct.size() != replicate_seeds.size()) {
      throw ConfigError("ExperimentConfig: replicate seeds must be pairwise distinct");
    }
  }
}

std::vector<std::int64_t> ExperimentConfig::effective_checkpoints() const {
  if (checkpoints.empty()) return {N};
  return checkpoints;
}

std::uint64_t ExperimentConfig::stream_id(std::int64_t replicate) const {
  if (replicate < 0 || replicate >= replicates) throw ConfigError("ExperimentConfig: replicate index out of range");
  if (replicate_seeds.empty()) return static_cast<std::uint64_t>(replicate);
  return replicate_seeds[static_cast<std::size_t>(replicate)];
}

std::vector<double> generate_draws(const ExperimentConfig& config, std::int64_t replicate) {
  const std::uint64_t stream = config.stream_id(replicate);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(config.N));
  for (std::int64_t n = 1; n <= config.N; ++n) {
    Rng rng = Rng::substream(config.master_seed, stream, static_cast<std::uint64_t>(n));
    xs.push_back(sample(config.spec, n, rng));
  }
  return xs;
}

std::vector<LogPower> generate_powers(const ExperimentConfig& config, std::int64_t replicate) {
  const auto xs = generate_draws(config, replicate);
  std::vector<LogPower> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = config.d(static_cast<std::int64_t>(i) + 1);
    if (!(d > 0.0)) throw DomainError("generate_powers: exponent schedule must be positive");
    out.push_back(log_power(xs[i], d));
  }
  return out;
}

namespace {

FrequencyTable finish_table(const std::array<std::int64_t, 9>& counts, std::int64_t total) {
  FrequencyTable t;
  t.counts = counts;
  t.total = total;
  for (std::size_t k = 0; k < 9; ++k) {
    t.frequencies[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
  }
  return t;
}

std::vector<double> fractional_parts(std::span<const LogPower> powers) {
  std::vector<double> u;
  u.reserve(powers.size());
  for (const auto& p : powers) u.push_back(p.frac);
  return u;
}

}  // namespace

FrequencyTable digit_frequencies(std::span<const LogPower> xs) {
  if (xs.empty()) throw DomainError("digit_frequencies: empty realisation");
  std::array<std::int64_t, 9> counts{};
  for (const auto& x : xs) ++counts[static_cast<std::size_t>(x.first_digit() - 1)];
  return finish_table(counts, static_cast<std::int64_t>(xs.size()));
}

FrequencyTable digit_frequencies(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("digit_frequencies: empty realisation");
  std::array<std::int64_t, 9> counts{};
  for (double x : xs) ++counts[static_cast<std::size_t>(first_digit(x) - 1)];
  return finish_table(counts, static_cast<std::int64_t>(xs.size()));
}

TrajectoryReport discrepancy_trajectory(const ExperimentConfig& config, std::span<const LogPower> powers) {
  const auto cks = config.effective_checkpoints();
  if (static_cast<std::int64_t>(powers.size()) < cks.back()) {
    throw DomainError("discrepancy_trajectory: realisation shorter than the last checkpoint");
  }
  const auto u = fractional_parts(powers);
  TrajectoryReport report;
  PrefixDiscrepancy prefix;
  std::int64_t done = 0;
  for (auto ck : cks) {
    prefix.extend(std::span<const double>(u).subspan(static_cast<std::size_t>(done),
                                                      static_cast<std::size_t>(ck - done)));
    done = ck;
    const auto r = prefix.report();
    report.points.push_back({ck, r.star, r.extreme, theorem1_rhs(ck, config.rate, config.d)});
  }
  return report;
}

TrajectoryReport discrepancy_trajectory(const ExperimentConfig& config, std::int64_t replicate) {
  config.validate();
  return discrepancy_trajectory(config, generate_powers(config, replicate));
}

std::vector<Complex> cohen_cuny_expectations(const ExperimentConfig& config) {
  const auto H = static_cast<std::size_t>(config.H_max);
  std::vector<Complex> grid(static_cast<std::size_t>(config.N) * H);
  std::map<std::pair<Law, double>, Complex> cache;
  for (std::int64_t n = 1; n <= config.N; ++n) {
    const Law law = resolve(config.spec, n);
    const double dn = config.d(n);
    if (!(dn > 0.0)) throw DomainError("cohen_cuny_expectations: exponent schedule must be positive");
    for (std::size_t h = 1; h <= H; ++h) {
      const double t = static_cast<double>(h) * dn / std::numbers::ln10;
      auto key = std::make_pair(law, t);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(std::move(key), char_fn(law, t, 1e-8)).first;
      grid[static_cast<std::size_t>(n - 1) * H + (h - 1)] = it->second;
    }
  }
  return grid;
}

double cohen_cuny_statistic(const ExperimentConfig& config, std::span<const LogPower> powers,
                            std::span<const Complex> expectations) {
  const auto H = static_cast<std::size_t>(config.H_max);
  if (powers.size() != static_cast<std::size_t>(config.N) || expectations.size() != powers.size() * H) {
    throw DomainError("cohen_cuny_statistic: realisation or expectation grid has the wrong size");
  }
  double best = 0.0;
  for (std::size_t h = 1; h <= H; ++h) {
    CompensatedComplexSum acc;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      acc.add(unit_phase(static_cast<double>(h) * powers[i].frac) - expectations[i * H + (h - 1)]);
    }
    best = std::max(best, std::norm(acc.value()));
  }
  const auto nd = static_cast<double>(config.N);
  const double scale = std::log1p(static_cast<double>(config.H_max)) * std::log1p(std::pow(nd, config.eta)) * nd;
  return best / scale;
}

double cohen_cuny_statistic(const ExperimentConfig& config, std::int64_t replicate) {
  config.validate();
  const auto expectations = cohen_cuny_expectations(config);
  return cohen_cuny_statistic(config, generate_powers(config, replicate), expectations);
}

ReplicateResult run_replicate(const ExperimentConfig& config, std::int64_t replicate) {
  config.validate();
  const auto powers = generate_powers(config, replicate);
  return {digit_frequencies(powers), discrepancy_trajectory(config, powers)};
}

void parallel_for(std::int64_t count, unsigned threads, const std::function<void(std::int64_t)>& fn) {
  if (count <= 0) return;
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, count));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::int64_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<ReplicateResult> run_replicates(const ExperimentConfig& config) {
  config.validate();
  std::vector<ReplicateResult> results(static_cast<std::size_t>(config.replicates));
  parallel_for(config.replicates, config.threads,
               [&](std::int64_t r) { results[static_cast<std::size_t>(r)] = run_replicate(config, r); });
  return results;
}

ExperimentSummary summarize(std::span<const ReplicateResult> results) {
  if (results.empty()) throw DomainError("summarize: no replicates");
  ExperimentSummary s;
  s.replicates = static_cast<std::int64_t>(results.size());
  const auto& first = results.front().trajectory.points;
  for (std::size_t c = 0; c < first.size(); ++c) {
    std::vector<double> values;
    for (const auto& r : results) {
      if (r.trajectory.points.size() != first.size() || r.trajectory.points[c].checkpoint != first[c].checkpoint) {
        throw DomainError("summarize: replicates disagree on checkpoints");
      }
      values.push_back(r.trajectory.points[c].d_extreme);
    }
    s.checkpoints.push_back({first[c].checkpoint, mean(values), median(values), quantile(values, 0.05),
                             quantile(values, 0.95), first[c].theorem1_rhs});
  }
  for (std::size_t k = 0; k < 9; ++k) {
    std::vector<double> values;
    for (const auto& r : results) values.push_back(r.digits.frequencies[k]);
    s.digit_mean[k] = mean(values);
    s.digit_standard_error[k] = standard_error(values);
  }
  return s;
}

ExperimentSummary aggregate(const ExperimentConfig& config) {
  if (config.replicates < 2) throw ConfigError("aggregate: at least two replicates are required");
  const auto results = run_replicates(config);
  return summarize(results);
}

}  // namespace benford
