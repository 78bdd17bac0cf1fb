#pragma once

#include "benford/distributions.hpp"
#include "benford/weyl_bounds.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace benford::cli {

struct GlobalOptions {
  std::uint64_t seed = 20240601;
  std::string out_dir = "benford-out";
  std::string config;
  unsigned threads = 1;
};

struct FamilyOptions {
  std::string family = "uniform-cont";
  std::string p = "0.5";
  std::string eps = "1";
  std::string a = "1";
  std::string b = "n";
  std::string lambda = "1";
  std::string alpha = "2";
  std::string value = "1";

  DistributionSpec to_spec() const;
  DistributionSpec to_spec(std::string_view family_name) const;
};

struct RateOptions {
  double rate_alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 1.0;
  std::string theta = "auto";  // "auto" reads the exponent of a poly d schedule
  double c0 = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double C0 = 1.0;
  std::string r = "poly:c=1,theta=-1";

  RateParams to_params(const Schedule& d) const;
};

struct Table1Options {
  std::int64_t n = 1000;
  std::string d = "2";
  std::int64_t replicates = 1;
};

struct DiscrepancyOptions {
  FamilyOptions family;
  std::string d = "2";
  std::int64_t n = 1000;
  std::string checkpoints = "auto";
  std::int64_t replicates = 1;
  RateOptions rate;
};

struct BoundsOptions {
  std::string check = "lemma4";
  std::string k = "1..5000";
  std::string h = "auto";
  std::string n = "auto";
  std::string bound = "literal";
  FamilyOptions family;
  RateOptions rate;
};

struct CharfnOptions {
  std::string family = "all";
  FamilyOptions params;
  std::string n = "2,10,100,1000";
  std::string t = "0.1,0.5,1,2,5,10";
  double tol = 1e-6;
  std::int64_t mc_draws = 1'000'000;
};

struct WeylOptions {
  std::string source = "pow2";
  FamilyOptions family;
  std::string d = "1";
  std::int64_t n = 1000;
  std::int64_t H = 10;
  double safety = 1.0;
};

/// A data file held in memory until the command has finished computing.
struct OutputFile {
  std::string name;
  std::string content;
};

struct CommandResult {
  std::vector<OutputFile> files;
  int exit_code = 0;
};

CommandResult cmd_table1(const GlobalOptions& g, const Table1Options& o, std::ostream& out, std::ostream& err);
CommandResult cmd_discrepancy(const GlobalOptions& g, const DiscrepancyOptions& o, std::ostream& out,
                              std::ostream& err);
CommandResult cmd_bounds(const GlobalOptions& g, const BoundsOptions& o, std::ostream& out, std::ostream& err);
CommandResult cmd_charfn(const GlobalOptions& g, const CharfnOptions& o, std::ostream& out, std::ostream& err);
CommandResult cmd_weyl(const GlobalOptions& g, const WeylOptions& o, std::ostream& out, std::ostream& err);

/// Comma-joined CSV line with LF ending.
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace benford::cli
