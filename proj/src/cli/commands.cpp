#include "commands.hpp"

#include "benford/cli.hpp"
#include "benford/discrepancy.hpp"
#include "benford/errors.hpp"
#include "benford/hypotheses.hpp"
#include "benford/mantissa.hpp"
#include "benford/simulation.hpp"
#include "benford/stats.hpp"
#include "benford/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace benford::cli {
namespace {

constexpr double kMaxGridCells = 1e7;

// Published single realisation of (X_n^2), n <= 1000, and the column
// printed beside it as Benford's law.
constexpr std::array<double, 9> kPublishedRealization = {0.308, 0.204, 0.096, 0.116, 0.084,
                                                     0.068, 0.060, 0.028, 0.036};
constexpr std::array<double, 9> kPublishedBenfordColumn = {0.306, 0.184, 0.116, 0.106, 0.082,
                                                       0.055, 0.050, 0.053, 0.048};

std::string fmt(double v) { return format_double(v); }
std::string fmt(std::int64_t v) { return std::to_string(v); }
std::string fmt(bool v) { return v ? "true" : "false"; }

std::vector<std::int64_t> auto_checkpoints(std::int64_t N) {
  std::vector<std::int64_t> out;
  for (std::int64_t decade = 10; decade < N; decade *= 10) {
    for (std::int64_t m : {1, 2, 5}) {
      if (m * decade < N) out.push_back(m * decade);
    }
  }
  out.push_back(N);
  return out;
}

void guard_cells(double cells) {
  if (cells > kMaxGridCells) throw SizeError("grid has more than 10^7 cells");
}

// Log-spaced subset of a grid, keeping both ends.
std::vector<std::int64_t> thin_grid(const std::vector<std::int64_t>& grid, std::size_t target) {
  if (grid.size() <= target) return grid;
  std::set<std::int64_t> keep{grid.front(), grid.back()};
  for (std::size_t i = 0; i < target; ++i) {
    const double pos = std::pow(static_cast<double>(grid.size() - 1), static_cast<double>(i) / (target - 1));
    keep.insert(grid[static_cast<std::size_t>(std::lround(pos))]);
  }
  return {keep.begin(), keep.end()};
}

std::string_view case_name(Prop2Case c) {
  switch (c) {
    case Prop2Case::case1: return "case1";
    case Prop2Case::case2: return "case2";
    case Prop2Case::undetermined: break;
  }
  return "undetermined";
}

}  // namespace

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

DistributionSpec FamilyOptions::to_spec() const { return to_spec(family); }

DistributionSpec FamilyOptions::to_spec(std::string_view family_name) const {
  DistributionSpec s;
  s.family = parse_family(family_name);
  s.p = Schedule::parse(p);
  s.eps = Schedule::parse(eps);
  s.a = Schedule::parse(a);
  s.b = Schedule::parse(b);
  s.lambda = Schedule::parse(lambda);
  s.alpha = Schedule::parse(alpha);
  s.value = Schedule::parse(value);
  return s;
}

RateParams RateOptions::to_params(const Schedule& d) const {
  RateParams rp;
  rp.alpha = rate_alpha;
  rp.beta = beta;
  rp.gamma = gamma;
  rp.delta = delta;
  if (theta == "auto") {
    rp.theta = d.kind() == Schedule::Kind::polynomial ? std::max(0.0, d.power()) : 0.0;
  } else {
    const auto v = parse_double_list(theta);
    if (v.size() != 1) throw ConfigError("--theta expects one number or 'auto'");
    rp.theta = v.front();
  }
  rp.c0 = c0;
  rp.c1 = c1;
  rp.c2 = c2;
  rp.C0 = C0;
  rp.r = Schedule::parse(r);
  rp.validate();
  return rp;
}

CommandResult cmd_table1(const GlobalOptions& g, const Table1Options& o, std::ostream& out, std::ostream&) {
  ExperimentConfig c;
  c.spec = DistributionSpec::continuous_uniform(Schedule::constant(1.0), Schedule::polynomial(1.0, 1.0));
  c.spec.degenerate_as_point_mass = true;
  c.d = Schedule::parse(o.d);
  c.N = o.n;
  c.master_seed = g.seed;
  c.replicates = o.replicates;
  c.threads = g.threads;
  if (c.N < 2) throw ConfigError("--n must be >= 2");
  const auto results = run_replicates(c);

  CommandResult res;
  const auto& table = results.front().digits;
  std::string csv = csv_line({"digit", "frequency", "benford_exact", "paper_realization", "abs_error"});
  for (int k = 1; k <= 9; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    const double exact = benford_digit_probability(k);
    csv += csv_line({fmt(std::int64_t{k}), fmt(table.frequencies[i]), fmt(exact), fmt(kPublishedRealization[i]),
                     fmt(std::abs(table.frequencies[i] - exact))});
  }
  res.files.push_back({"digits.csv", csv});

  out << "digit  frequency  benford  published\n";
  for (std::size_t i = 0; i < 9; ++i) {
    out << "  " << i + 1 << "    " << fmt(table.frequencies[i]) << "    " << fmt(benford_digit_probability(int(i) + 1))
        << "    " << fmt(kPublishedRealization[i]) << '\n';
  }

  if (results.size() > 1) {
    const auto summary = summarize(results);
    std::string s = csv_line({"digit", "mean_frequency", "std_error", "q005", "q995", "benford_exact",
                              "published_benford_column", "mean_abs_error"});
    out << "\nover " << results.size() << " replicates\n"
        << "digit  mean  q005  q995  |mean-benford|  |mean-published_column|\n";
    for (std::size_t i = 0; i < 9; ++i) {
      std::vector<double> values;
      for (const auto& r : results) values.push_back(r.digits.frequencies[i]);
      const double exact = benford_digit_probability(int(i) + 1);
      const double lo = quantile(values, 0.005);
      const double hi = quantile(values, 0.995);
      s += csv_line({fmt(std::int64_t(i + 1)), fmt(summary.digit_mean[i]), fmt(summary.digit_standard_error[i]),
                     fmt(lo), fmt(hi), fmt(exact), fmt(kPublishedBenfordColumn[i]),
                     fmt(std::abs(summary.digit_mean[i] - exact))});
      out << "  " << i + 1 << "    " << fmt(summary.digit_mean[i]) << "  " << fmt(lo) << "  " << fmt(hi) << "  "
          << fmt(std::abs(summary.digit_mean[i] - exact)) << "  "
          << fmt(std::abs(summary.digit_mean[i] - kPublishedBenfordColumn[i])) << '\n';
    }
    res.files.push_back({"digits_summary.csv", s});
  }
  return res;
}

CommandResult cmd_discrepancy(const GlobalOptions& g, const DiscrepancyOptions& o, std::ostream& out,
                              std::ostream& err) {
  ExperimentConfig c;
  c.spec = o.family.to_spec();
  c.spec.degenerate_as_point_mass = true;
  c.d = Schedule::parse(o.d);
  c.N = o.n;
  c.master_seed = g.seed;
  c.replicates = o.replicates;
  c.threads = g.threads;
  c.checkpoints = o.checkpoints == "auto" ? auto_checkpoints(o.n) : parse_int_list(o.checkpoints);
  c.rate = o.rate.to_params(c.d);
  if (c.rate.beta - c.rate.delta * c.rate.theta <= 0.0) {
    err << "warning: beta - delta * theta = " << fmt(c.rate.beta - c.rate.delta * c.rate.theta)
        << " <= 0, the overlaid bound does not decay\n";
  }
  const auto results = run_replicates(c);

  CommandResult res;
  for (std::size_t r = 0; r < results.size(); ++r) {
    std::string csv = csv_line({"checkpoint", "d_star", "d_extreme", "theorem1_rhs"});
    for (const auto& p : results[r].trajectory.points) {
      csv += csv_line({fmt(p.checkpoint), fmt(p.d_star), fmt(p.d_extreme), fmt(p.theorem1_rhs)});
    }
    res.files.push_back({"trajectory_r" + std::to_string(r) + ".csv", csv});
  }
  const auto summary = summarize(results);
  std::string agg = csv_line({"checkpoint", "replicates", "mean", "median", "q05", "q95", "theorem1_rhs"});
  for (const auto& s : summary.checkpoints) {
    agg += csv_line({fmt(s.checkpoint), fmt(summary.replicates), fmt(s.mean), fmt(s.median), fmt(s.q05),
                     fmt(s.q95), fmt(s.theorem1_rhs)});
  }
  res.files.push_back({"aggregate.csv", agg});
  const auto& last = summary.checkpoints.back();
  out << "N = " << last.checkpoint << ": mean extreme discrepancy " << fmt(last.mean) << " over "
      << summary.replicates << " replicate(s), bound overlay " << fmt(last.theorem1_rhs) << '\n';
  return res;
}

CommandResult cmd_bounds(const GlobalOptions&, const BoundsOptions& o, std::ostream& out, std::ostream&) {
  CommandResult res;
  std::int64_t violations = 0;
  std::int64_t rows = 0;
  std::string csv;
  auto grid_or = [](const std::string& text, const char* fallback) {
    return parse_int_list(text == "auto" ? std::string_view(fallback) : std::string_view(text));
  };

  if (o.check == "lemma4") {
    const auto ks = parse_int_list(o.k);
    const auto hs = grid_or(o.h, "1..50");
    guard_cells(static_cast<double>(ks.size()) * static_cast<double>(hs.size()));
    const auto k_max = *std::max_element(ks.begin(), ks.end());
    csv = csv_line({"k", "h", "lhs_modulus", "rhs_bound", "ok"});
    for (auto h : hs) {
      const auto sums = partial_exponential_sums(k_max, h);
      for (auto k : ks) {
        if (k < 1) throw ConfigError("--k values must be >= 1");
        const double lhs = std::abs(sums[static_cast<std::size_t>(k - 1)]);
        const double rhs = lemma_bound(k, h);
        const bool ok = lhs <= rhs;
        violations += !ok;
        ++rows;
        csv += csv_line({fmt(k), fmt(h), fmt(lhs), fmt(rhs), fmt(ok)});
      }
    }
  } else if (o.check == "vdc") {
    const auto ns = grid_or(o.n, "10,50,100,500,1000,2000");
    const auto hs = grid_or(o.h, "1..50");
    guard_cells(static_cast<double>(ns.size()) * static_cast<double>(hs.size()));
    const auto n_max = *std::max_element(ns.begin(), ns.end());
    csv = csv_line({"n", "h", "lhs_modulus", "rhs_bound", "ok"});
    for (auto h : hs) {
      const auto sums = partial_exponential_sums(n_max, h);
      for (auto n : ns) {
        if (n < 1) throw ConfigError("--n values must be >= 1");
        const double lhs = std::abs(sums[static_cast<std::size_t>(n - 1)]) / static_cast<double>(n);
        const double rhs = van_der_corput_bound(n, h);
        const bool ok = lhs <= rhs;
        violations += !ok;
        ++rows;
        csv += csv_line({fmt(n), fmt(h), fmt(lhs), fmt(rhs), fmt(ok)});
      }
    }
  } else if (o.check == "prop2") {
    const auto ns = grid_or(o.n, "4..2000");
    const auto hs = grid_or(o.h, "1..50");
    guard_cells(static_cast<double>(ns.size()) * static_cast<double>(hs.size()));
    const auto spec = o.family.to_spec(o.family.family == "auto" ? "uniform-disc" : o.family.family);
    const RateParams rp = o.rate.to_params(Schedule::constant(1.0));
    csv = csv_line({"n", "h", "lhs_modulus", "rhs_bound", "ok"});
    for (auto n : ns) {
      const Law law = resolve(spec, n);
      for (auto h : hs) {
        const double lhs = std::abs(char_fn(law, static_cast<double>(h), 1e-10));
        const double rhs = prop_bound_form(h, n, rp);
        const bool ok = lhs <= rhs;
        violations += !ok;
        ++rows;
        csv += csv_line({fmt(n), fmt(h), fmt(lhs), fmt(rhs), fmt(ok)});
      }
    }
    const auto grid = thin_grid(ns, 25);
    const auto report = check_prop2_hypotheses(spec, grid);
    std::string hyp = csv_line({"n", "mode", "mode_mass", "mode_times_mass", "mean_inverse", "unimodal",
                                "support_checked"});
    for (const auto& r : report.rows) {
      hyp += csv_line({fmt(r.n), fmt(r.mode), fmt(r.mode_mass), fmt(r.mode_times_mass), fmt(r.mean_inverse),
                       fmt(r.unimodal), fmt(r.support_checked)});
    }
    res.files.push_back({"prop2_hypotheses.csv", hyp});
    out << "mode conditions: " << case_name(report.detected) << ", beta ~ " << fmt(report.beta) << '\n';
  } else if (o.check == "prop3") {
    const auto ns = grid_or(o.n, "1");
    const auto hs = grid_or(o.h, "1..100");
    guard_cells(static_cast<double>(ns.size()) * static_cast<double>(hs.size()));
    if (o.bound != "literal" && o.bound != "endpoint") throw ConfigError("--bound must be literal or endpoint");
    auto spec = o.family.to_spec(o.family.family == "auto" ? "exponential" : o.family.family);
    csv = csv_line({"n", "h", "lhs_modulus", "rhs_bound", "ok"});
    for (auto n : ns) {
      const std::int64_t one[] = {n};
      const auto report = check_prop3_hypotheses(spec, one);
      const auto& row = report.rows.front();
      const double rhs = (o.bound == "literal" ? row.c1 : row.c1_endpoint) + 1e-6;
      const Law law = resolve(spec, n);
      for (auto h : hs) {
        const auto oracle = char_fn_oracle(law, static_cast<double>(h), 1e-8, {0, 0});
        const double lhs = static_cast<double>(h) * std::abs(oracle.value);
        const bool ok = lhs <= rhs;
        violations += !ok;
        ++rows;
        csv += csv_line({fmt(n), fmt(h), fmt(lhs), fmt(rhs), fmt(ok)});
      }
    }
  } else {
    throw ConfigError("--check must be one of lemma4, vdc, prop2, prop3");
  }

  res.files.insert(res.files.begin(), {"bounds.csv", csv});
  out << o.check << ": " << rows << " rows, " << violations << " violation(s)\n";
  res.exit_code = violations == 0 ? kExitOk : kExitCheckFailed;
  return res;
}

CommandResult cmd_charfn(const GlobalOptions& g, const CharfnOptions& o, std::ostream& out, std::ostream& err) {
  if (!(o.tol > 0.0 && o.tol <= 1e-2)) throw ConfigError("--tol must lie in (0, 1e-2]");
  if (o.mc_draws < 0) throw ConfigError("--mc-draws must be >= 0");
  std::vector<std::string> families;
  if (o.family == "all") {
    families = {"geometric", "powerlaw", "uniform-disc", "exponential", "frechet", "uniform-cont"};
  } else {
    families = {o.family};
  }
  const auto ns = parse_int_list(o.n);
  const auto ts = parse_double_list(o.t);
  guard_cells(static_cast<double>(families.size() * ns.size() * ts.size()));

  struct Row {
    std::string family;
    std::int64_t n = 0;
    double t = 0.0;
    std::size_t t_index = 0;
    std::uint64_t family_index = 0;
    bool skipped = false;
    std::string note;
    Complex value, oracle, mc;
    double mc_se = std::numeric_limits<double>::quiet_NaN();
    bool ok = false;
  };
  std::vector<Row> rows;
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (auto n : ns) {
      for (std::size_t i = 0; i < ts.size(); ++i) {
        Row row;
        row.family = families[f];
        row.n = n;
        row.t = ts[i];
        row.t_index = i;
        row.family_index = f;
        rows.push_back(row);
      }
    }
  }
  std::vector<DistributionSpec> specs;
  for (const auto& f : families) specs.push_back(o.params.to_spec(f));

  parallel_for(static_cast<std::int64_t>(rows.size()), g.threads, [&](std::int64_t idx) {
    Row& row = rows[static_cast<std::size_t>(idx)];
    Law law;
    try {
      law = resolve(specs[row.family_index], row.n);
    } catch (const DomainError& e) {
      row.skipped = true;
      row.note = e.what();
      return;
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.value = row.oracle = row.mc = Complex(nan, nan);
    try {
      row.value = char_fn(law, row.t, o.tol);
      OracleOptions opt;
      opt.mc_draws = static_cast<std::size_t>(o.mc_draws);
      opt.mc_seed = Rng::substream(g.seed, row.family_index * 1'000'003ULL + row.t_index,
                                   static_cast<std::uint64_t>(row.n))
                        .next_u64();
      const auto oracle = char_fn_oracle(law, row.t, o.tol, opt);
      row.oracle = oracle.value;
      row.ok = std::abs(row.value - row.oracle) <= o.tol;
      if (o.mc_draws > 0) {
        row.mc = oracle.mc_mean;
        row.mc_se = oracle.mc_standard_error;
        row.ok = row.ok && std::abs(row.value - row.mc) <= 5.0 * row.mc_se + o.tol;
      }
    } catch (const ConvergenceError& e) {
      row.note = e.what();
      row.ok = false;
    }
  });

  CommandResult res;
  std::string csv = csv_line({"family", "n", "t", "re", "im", "modulus", "oracle_modulus", "abs_diff", "mc_modulus",
                              "mc_se", "ok"});
  std::int64_t failures = 0;
  std::int64_t written = 0;
  for (const auto& r : rows) {
    if (r.skipped) {
      err << "skipped " << r.family << " n=" << r.n << ": " << r.note << '\n';
      continue;
    }
    if (!r.note.empty()) err << r.family << " n=" << r.n << " t=" << fmt(r.t) << ": " << r.note << '\n';
    failures += !r.ok;
    ++written;
    csv += csv_line({r.family, fmt(r.n), fmt(r.t), fmt(r.value.real()), fmt(r.value.imag()), fmt(std::abs(r.value)),
                     fmt(std::abs(r.oracle)), fmt(std::abs(r.value - r.oracle)), fmt(std::abs(r.mc)), fmt(r.mc_se),
                     fmt(r.ok)});
  }
  res.files.push_back({"charfn.csv", csv});
  out << "charfn: " << written << " rows, " << failures << " not ok\n";
  res.exit_code = failures == 0 ? kExitOk : kExitCheckFailed;
  return res;
}

CommandResult cmd_weyl(const GlobalOptions& g, const WeylOptions& o, std::ostream& out, std::ostream&) {
  if (o.n < 1) throw ConfigError("--n must be >= 1");
  if (o.H < 1) throw ConfigError("--H must be >= 1");
  guard_cells(static_cast<double>(o.n) * static_cast<double>(o.H));
  std::vector<double> u;
  if (o.source == "pow2") {
    for (std::int64_t n = 1; n <= o.n; ++n) u.push_back(log_power(2.0, static_cast<double>(n)).frac);
  } else if (o.source == "family") {
    ExperimentConfig c;
    c.spec = o.family.to_spec();
    c.spec.degenerate_as_point_mass = true;
    c.d = Schedule::parse(o.d);
    c.N = o.n;
    c.master_seed = g.seed;
    for (const auto& p : generate_powers(c, 0)) u.push_back(p.frac);
  } else {
    throw ConfigError("--source must be pow2 or family");
  }
  const auto sp = SamplePoints::from_unsorted(std::move(u));
  const auto d = discrepancy_report(sp);

  CommandResult res;
  std::string csv = csv_line({"h", "re", "im", "modulus", "erdos_turan", "d_extreme", "d_star", "bound_holds"});
  std::int64_t violations = 0;
  CompensatedSum partial;
  for (std::int64_t h = 1; h <= o.H; ++h) {
    const Complex w = weyl_sum(sp, h);
    partial.add(std::abs(w) / static_cast<double>(h));
    const double et = o.safety * (1.0 / static_cast<double>(h + 1) + partial.value());
    const bool holds = d.extreme <= et;
    violations += !holds;
    csv += csv_line({fmt(h), fmt(w.real()), fmt(w.imag()), fmt(std::abs(w)), fmt(et), fmt(d.extreme), fmt(d.star),
                     fmt(holds)});
  }
  res.files.push_back({"weyl.csv", csv});
  out << "weyl: N = " << sp.size() << ", extreme discrepancy " << fmt(d.extreme) << ", " << violations
      << " Erdos-Turan violation(s)\n";
  res.exit_code = violations == 0 ? kExitOk : kExitCheckFailed;
  return res;
}

}  // namespace benford::cli
