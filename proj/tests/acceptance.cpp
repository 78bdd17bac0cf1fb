// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "benford/cli.hpp"
#include "benford/discrepancy.hpp"
#include "benford/simulation.hpp"
#include "benford/stats.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace benford;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool pass = false;
  std::string detail;
};

fs::path work_root() {
  static const fs::path root = [] {
    auto p = fs::temp_directory_path() / "benford-acceptance";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  double seconds = 0.0;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  CliRun r;
  r.code = cli::run(args, out, err);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Rows of a CSV file without its header, split on commas.
std::vector<std::vector<std::string>> rows(const fs::path& p) {
  std::istringstream in(slurp(p));
  std::vector<std::vector<std::string>> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    out.push_back(cells);
  }
  return out;
}

std::string num(double v) { return cli::format_double(v); }

Check table1() {
  const auto single = work_root() / "c1-single";
  const auto many = work_root() / "c1-many";
  const auto a = cli({"--out-dir", single.string(), "--threads", "1", "table1", "--n", "1000", "--d", "2"});
  const auto b = cli({"--out-dir", many.string(), "--threads", "1", "table1", "--n", "1000", "--d", "2",
                      "--replicates", "100"});
  if (a.code != 0 || b.code != 0) return {false, "table1 exited with " + std::to_string(a.code) + "/" +
                                                     std::to_string(b.code) + ": " + a.err + b.err};
  double worst_single = 0.0;
  for (const auto& r : rows(single / "digits.csv")) worst_single = std::max(worst_single, std::stod(r[4]));
  double worst_mean = 0.0;
  double lo = 0.0, hi = 0.0;
  for (const auto& r : rows(many / "digits_summary.csv")) {
    worst_mean = std::max(worst_mean, std::stod(r[7]));
    if (r[0] == "1") {
      lo = std::stod(r[3]);
      hi = std::stod(r[4]);
    }
  }
  const double seconds = a.seconds + b.seconds;
  const bool pass = worst_single <= 0.05 && worst_mean <= 0.015 && lo <= 0.308 && 0.308 <= hi && seconds < 10.0;
  return {pass, "max single-seed error " + num(worst_single) + ", max mean error " + num(worst_mean) +
                    ", digit-1 99% band [" + num(lo) + ", " + num(hi) + "], " + num(seconds) + " s"};
}

Check bounds_run(const std::string& name, std::vector<std::string> args, double limit) {
  const auto dir = work_root() / name;
  std::vector<std::string> full{"--out-dir", dir.string(), "bounds"};
  full.insert(full.end(), args.begin(), args.end());
  const auto r = cli(full);
  std::size_t n_rows = 0, bad = 0;
  for (const auto& row : rows(dir / "bounds.csv")) {
    ++n_rows;
    bad += row.back() != "true";
  }
  const bool pass = r.code == 0 && bad == 0 && n_rows > 0 && r.seconds < limit;
  return {pass, std::to_string(n_rows) + " rows, " + std::to_string(bad) + " violations, " + num(r.seconds) + " s"};
}

Check oracle_equivalence() {
  std::mt19937_64 gen(20240601);
  std::uniform_int_distribution<int> size(1, 200);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> pts(static_cast<std::size_t>(size(gen)));
    for (auto& p : pts) p = trial % 4 == 0 ? std::floor(unif(gen) * 16.0) / 16.0 : unif(gen);
    const auto sp = SamplePoints::from_unsorted(pts);
    worst = std::max(worst, std::abs(extreme_discrepancy(sp) - extreme_discrepancy_oracle(sp)));
  }
  double worst_lattice = 0.0;
  for (std::size_t n : {1u, 2u, 5u, 10u, 100u}) {
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(n));
    const double d = star_discrepancy(SamplePoints::from_sorted(u));
    worst_lattice = std::max(worst_lattice, std::abs(d - 0.5 / static_cast<double>(n)));
  }
  return {worst <= 1e-12 && worst_lattice <= 1e-12,
          "max fuzz gap " + num(worst) + ", max lattice gap " + num(worst_lattice)};
}

Check powers_of_two() {
  std::vector<LogPower> xs;
  for (int n = 1; n <= 1000; ++n) xs.push_back(log_power(2.0, n));
  const double d = benford_discrepancy(xs).extreme;
  return {d < 0.05, "D = " + num(d)};
}

Check exponent_trend() {
  std::vector<double> means;
  for (double d : {1.0, 2.0, 4.0, 8.0}) {
    ExperimentConfig c;
    c.spec = DistributionSpec::continuous_uniform(Schedule::constant(1.0), Schedule::polynomial(1.0, 1.0));
    c.spec.degenerate_as_point_mass = true;
    c.d = Schedule::constant(d);
    c.N = 1000;
    c.replicates = 100;
    c.master_seed = 20240601;
    c.threads = 0;
    means.push_back(aggregate(c).checkpoints.back().mean);
  }
  int inversions = 0;
  for (std::size_t i = 1; i < means.size(); ++i) inversions += means[i] > means[i - 1];
  std::string detail = "means";
  for (double m : means) detail += " " + num(m);
  return {inversions <= 1, detail + ", " + std::to_string(inversions) + " inversion(s)"};
}

Check charfn_grid() {
  const auto dir = work_root() / "c8";
  const auto r = cli({"--out-dir", dir.string(), "--threads", "0", "charfn"});
  std::size_t n_rows = 0, bad = 0;
  for (const auto& row : rows(dir / "charfn.csv")) {
    ++n_rows;
    bad += row.back() != "true";
  }
  return {r.code == 0 && bad == 0 && n_rows > 0,
          std::to_string(n_rows) + " rows, " + std::to_string(bad) + " not ok, " + num(r.seconds) + " s"};
}

Check cohen_cuny_trend() {
  std::vector<double> q95;
  for (std::int64_t N : {100, 1000, 10000}) {
    ExperimentConfig c;
    c.spec = DistributionSpec::exponential(Schedule::constant(1.0));
    c.N = N;
    c.H_max = 10;
    c.eta = 1.0;
    c.replicates = 200;
    c.master_seed = 20240601;
    const auto expect = cohen_cuny_expectations(c);
    std::vector<double> stats(200);
    parallel_for(200, 0, [&](std::int64_t r) {
      const auto powers = generate_powers(c, r);
      stats[static_cast<std::size_t>(r)] = cohen_cuny_statistic(c, powers, expect);
    });
    q95.push_back(quantile(stats, 0.95));
  }
  const auto k = kendall_trend(q95);
  return {k.p_increasing > 0.05, "q95 " + num(q95[0]) + " " + num(q95[1]) + " " + num(q95[2]) + ", tau " +
                                     num(k.tau) + ", p " + num(k.p_increasing)};
}

Check determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"table1", "--n", "1000", "--replicates", "3"},
      {"discrepancy", "--family", "exponential", "--n", "2000", "--replicates", "3"},
      {"bounds", "--check", "prop2", "--family", "geometric", "--p", "poly:c=1,theta=-1", "--n", "2..200"},
      {"charfn", "--family", "powerlaw", "--n", "2,50", "--t", "0.5,3", "--mc-draws", "20000"},
      {"weyl", "--source", "family", "--family", "frechet", "--n", "3000", "--H", "8"},
  };
  std::size_t compared = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::vector<fs::path> dirs;
    for (int rep = 0; rep < 2; ++rep) {
      dirs.push_back(work_root() / ("c10-" + std::to_string(i) + "-" + std::to_string(rep)));
      std::vector<std::string> args{"--seed", "777", "--threads", rep == 0 ? "1" : "0", "--out-dir", dirs.back().string()};
      args.insert(args.end(), commands[i].begin(), commands[i].end());
      const auto r = cli(args);
      if (r.code != 0) return {false, commands[i][0] + " exited with " + std::to_string(r.code) + ": " + r.err};
    }
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      const auto name = entry.path().filename();
      if (name == "manifest.json") continue;
      if (slurp(entry.path()) != slurp(dirs[1] / name)) return {false, commands[i][0] + ": " + name.string() + " differs"};
      ++compared;
    }
  }
  return {compared > 0, std::to_string(compared) + " data files byte-identical across runs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"first-digit table N=1000 d=2", table1},
      {"exponential-sum bound, 250k cells",
       [] { return bounds_run("c2", {"--check", "lemma4", "--k", "1..5000", "--h", "1..50"}, 60.0); }},
      {"van der Corput bound",
       [] { return bounds_run("c3", {"--check", "vdc", "--n", "10,50,100,500,1000,2000", "--h", "1..50"}, 1e9); }},
      {"density constant, exponential(1)",
       [] {
         return bounds_run("c4", {"--check", "prop3", "--family", "exponential", "--lambda", "1", "--n", "1", "--h",
                                  "1..100", "--bound", "literal"},
                           1e9);
       }},
      {"discrepancy oracle equivalence", oracle_equivalence},
      {"powers of two are Benford", powers_of_two},
      {"discrepancy decreases with d", exponent_trend},
      {"characteristic-function cross-validation", charfn_grid},
      {"Cohen-Cuny statistic bounded in N", cohen_cuny_trend},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c = {false, std::string("exception: ") + e.what()};
    }
    failures += !c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << c.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
