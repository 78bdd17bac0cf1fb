#pragma once

#include "benford/discrepancy.hpp"
#include "benford/distributions.hpp"
#include "benford/mantissa.hpp"
#include "benford/weyl_bounds.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace benford {

struct ExperimentConfig {
  DistributionSpec spec;
  ExponentSchedule d = Schedule::constant(1.0);
  std::int64_t N = 1000;
  std::uint64_t master_seed = 0;
  std::int64_t replicates = 1;
  /// Strictly increasing, each in [2, N]. Empty means {N}.
  std::vector<std::int64_t> checkpoints;
  double eta = 1.0;         // Cohen-Cuny normalisation exponent
  std::int64_t H_max = 10;  // harmonics probed by the Cohen-Cuny statistic
  /// Optional substream ids, one per replicate and pairwise distinct.
  /// Defaults to 0, 1, ..., replicates - 1.
  std::vector<std::uint64_t> replicate_seeds;
  RateParams rate;       // constants of the overlaid rate bound
  unsigned threads = 1;  // 0 = hardware concurrency

  /// Throws ConfigError.
  void validate() const;
  std::vector<std::int64_t> effective_checkpoints() const;
  std::uint64_t stream_id(std::int64_t replicate) const;
};

struct FrequencyTable {
  std::array<std::int64_t, 9> counts{};
  std::array<double, 9> frequencies{};
  std::int64_t total = 0;
};

struct TrajectoryPoint {
  std::int64_t checkpoint = 0;
  double d_star = 0.0;
  double d_extreme = 0.0;
  double theorem1_rhs = 0.0;
};

struct TrajectoryReport {
  std::vector<TrajectoryPoint> points;
};

/// X_n drawn from substream(master_seed, stream_id(replicate), n).
std::vector<double> generate_draws(const ExperimentConfig& config, std::int64_t replicate);

/// X_n^{d_n}, n = 1..N, in log space. Throws DomainError if some d_n <= 0.
std::vector<LogPower> generate_powers(const ExperimentConfig& config, std::int64_t replicate);

/// Throws DomainError on empty input.
FrequencyTable digit_frequencies(std::span<const LogPower> xs);
FrequencyTable digit_frequencies(std::span<const double> xs);

TrajectoryReport discrepancy_trajectory(const ExperimentConfig& config, std::span<const LogPower> powers);
TrajectoryReport discrepancy_trajectory(const ExperimentConfig& config, std::int64_t replicate);

/// E[e^{2 pi i h log10 X_n^{d_n}}] for n = 1..N, h = 1..H_max, stored at
/// [(n - 1) * H_max + (h - 1)]. Computed with char_fn at tolerance 1e-8,
/// each distinct (law, frequency) pair once.
std::vector<Complex> cohen_cuny_expectations(const ExperimentConfig& config);

/// max_h |sum_n (e^{2 pi i h log10 X_n^{d_n}} - E_n(h))|^2
///   / (ln(1 + H_max) ln(1 + N^eta) N).
double cohen_cuny_statistic(const ExperimentConfig& config, std::span<const LogPower> powers,
                            std::span<const Complex> expectations);
double cohen_cuny_statistic(const ExperimentConfig& config, std::int64_t replicate);

struct ReplicateResult {
  FrequencyTable digits;
  TrajectoryReport trajectory;
};

ReplicateResult run_replicate(const ExperimentConfig& config, std::int64_t replicate);

/// All replicates, in parallel on config.threads workers. The result is
/// independent of the thread count.
std::vector<ReplicateResult> run_replicates(const ExperimentConfig& config);

struct CheckpointSummary {
  std::int64_t checkpoint = 0;
  double mean = 0.0;
  double median = 0.0;
  double q05 = 0.0;
  double q95 = 0.0;
  double theorem1_rhs = 0.0;
};

struct ExperimentSummary {
  std::int64_t replicates = 0;
  std::vector<CheckpointSummary> checkpoints;  // of the extreme discrepancy
  std::array<double, 9> digit_mean{};
  std::array<double, 9> digit_standard_error{};
};

/// Works for any non-empty set of replicates with matching checkpoints.
ExperimentSummary summarize(std::span<const ReplicateResult> results);

/// Runs and summarises all replicates; requires replicates >= 2.
ExperimentSummary aggregate(const ExperimentConfig& config);

/// Runs fn(0..count-1) on up to `threads` workers (0 = hardware
/// concurrency). The first exception thrown by any task is rethrown.
void parallel_for(std::int64_t count, unsigned threads, const std::function<void(std::int64_t)>& fn);

}  // namespace benford
