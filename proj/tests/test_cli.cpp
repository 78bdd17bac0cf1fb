#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "benford/cli.hpp"
#include "benford/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using benford::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("benford-cli-test-" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("number formatting") {
  using benford::cli::format_double;
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-20) == "-2.5e-20");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("list parsing") {
  using benford::cli::parse_int_list;
  CHECK(parse_int_list("7") == std::vector<std::int64_t>{7});
  CHECK(parse_int_list("1..4,10") == std::vector<std::int64_t>{1, 2, 3, 4, 10});
  CHECK_THROWS_AS(parse_int_list("x"), benford::ConfigError);
  CHECK_THROWS_AS(parse_int_list("5..1"), benford::ConfigError);
  CHECK_THROWS_AS(parse_int_list(""), benford::ConfigError);
  CHECK_THROWS_AS(parse_int_list("1..1000000000"), benford::SizeError);
  CHECK(benford::cli::parse_double_list("0.5,2") == std::vector<double>{0.5, 2.0});
}

TEST_CASE("sha256") {
  CHECK(benford::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("usage errors exit with 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  const auto dir = scratch("usage").string();
  CHECK(invoke({"--out-dir", dir, "table1", "--bogus"}).code == 1);
  CHECK(invoke({"--out-dir", dir, "table1", "--n", "1"}).code == 1);
  CHECK(invoke({"--out-dir", dir, "charfn", "--family", "lognormal"}).code == 1);
  CHECK(invoke({"--out-dir", dir, "bounds", "--check", "nope"}).code == 1);
  CHECK(invoke({"--out-dir", dir, "--config", dir + "/missing.json", "table1"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"table1", "--help"}).code == 0);
}

TEST_CASE("bound checks: pass, violation and guard exit codes") {
  const auto dir = scratch("bounds");
  const auto d = dir.string();
  auto ok = invoke({"--out-dir", d, "bounds", "--check", "lemma4", "--k", "1..200", "--h", "1..5"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("0 violation") != std::string::npos);
  const auto csv = slurp(dir / "bounds.csv");
  CHECK(csv.rfind("k,h,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 200 * 5);

  auto literal = invoke({"--out-dir", d, "bounds", "--check", "prop3", "--family", "uniform-cont", "--n", "2",
                         "--h", "1..20", "--bound", "literal"});
  CHECK(literal.code == 2);
  auto endpoint = invoke({"--out-dir", d, "bounds", "--check", "prop3", "--family", "uniform-cont", "--n", "2",
                          "--h", "1..20", "--bound", "endpoint"});
  CHECK(endpoint.code == 0);

  auto guard = invoke({"--out-dir", d, "bounds", "--check", "lemma4", "--k", "1..50000000", "--h", "1..10"});
  CHECK(guard.code == 3);
}

TEST_CASE("table1 output, determinism and manifest") {
  const auto a = scratch("t1a");
  const auto b = scratch("t1b");
  REQUIRE(invoke({"--seed", "11", "--out-dir", a.string(), "table1", "--n", "500"}).code == 0);
  REQUIRE(invoke({"--seed", "11", "--out-dir", b.string(), "--threads", "3", "table1", "--n", "500"}).code == 0);
  const auto csv = slurp(a / "digits.csv");
  CHECK(csv == slurp(b / "digits.csv"));
  CHECK(csv.rfind("digit,frequency,benford_exact,paper_realization,abs_error\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
  CHECK(csv.find("0.308") != std::string::npos);

  const auto manifest = json::parse(slurp(a / "manifest.json"));
  CHECK(manifest["command"] == "table1");
  CHECK(manifest["master_seed"] == 11);
  CHECK(manifest["exit_code"] == 0);
  REQUIRE(manifest["files"].size() == 1);
  CHECK(manifest["files"][0]["path"] == "digits.csv");
  CHECK(manifest["files"][0]["sha256"] == benford::cli::sha256_hex(csv));
  CHECK(manifest["files"][0]["bytes"] == csv.size());

  const auto c = scratch("t1c");
  REQUIRE(invoke({"--seed", "12", "--out-dir", c.string(), "table1", "--n", "500"}).code == 0);
  CHECK(slurp(c / "digits.csv") != csv);
}

TEST_CASE("replicated table1 writes a summary") {
  const auto dir = scratch("t1r");
  REQUIRE(invoke({"--out-dir", dir.string(), "table1", "--n", "200", "--replicates", "5"}).code == 0);
  const auto s = slurp(dir / "digits_summary.csv");
  CHECK(s.rfind("digit,mean_frequency,std_error,q005,q995,benford_exact,published_benford_column,mean_abs_error\n", 0) ==
        0);
}

TEST_CASE("config file values yield to explicit flags") {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  const auto cfg = dir / "run.json";
  std::ofstream(cfg) << R"({"seed": 5, "table1": {"n": 300, "d": "3"}})";
  REQUIRE(invoke({"--config", cfg.string(), "--out-dir", (dir / "o").string(), "table1", "--n", "250"}).code == 0);
  const auto manifest = json::parse(slurp(dir / "o" / "manifest.json"));
  CHECK(manifest["master_seed"] == 5);
  CHECK(manifest["config"]["table1"]["n"] == "250");
  CHECK(manifest["config"]["table1"]["d"] == "3");

  std::ofstream(cfg) << R"({"table1": {"no_such_key": 1}})";
  CHECK(invoke({"--config", cfg.string(), "--out-dir", (dir / "o").string(), "table1"}).code == 1);
  std::ofstream(cfg) << R"({"nosuchcommand": {"n": 1}})";
  CHECK(invoke({"--config", cfg.string(), "--out-dir", (dir / "o").string(), "table1"}).code == 1);
  std::ofstream(cfg) << "{not json";
  CHECK(invoke({"--config", cfg.string(), "--out-dir", (dir / "o").string(), "table1"}).code == 1);
}

TEST_CASE("discrepancy and weyl outputs") {
  const auto dir = scratch("disc");
  REQUIRE(invoke({"--out-dir", dir.string(), "discrepancy", "--n", "300", "--replicates", "2", "--checkpoints",
                  "10,100,300"})
              .code == 0);
  CHECK(fs::exists(dir / "trajectory_r0.csv"));
  CHECK(fs::exists(dir / "trajectory_r1.csv"));
  const auto agg = slurp(dir / "aggregate.csv");
  CHECK(agg.rfind("checkpoint,replicates,mean,median,q05,q95,theorem1_rhs\n", 0) == 0);
  CHECK(std::count(agg.begin(), agg.end(), '\n') == 4);

  const auto w = scratch("weyl");
  REQUIRE(invoke({"--out-dir", w.string(), "weyl", "--source", "pow2", "--n", "1000", "--H", "5"}).code == 0);
  const auto csv = slurp(w / "weyl.csv");
  CHECK(csv.rfind("h,re,im,modulus,erdos_turan,d_extreme,d_star,bound_holds\n", 0) == 0);
}

TEST_CASE("charfn rows") {
  const auto dir = scratch("charfn");
  REQUIRE(invoke({"--out-dir", dir.string(), "charfn", "--family", "exponential", "--n", "1", "--t", "0.5,1",
                  "--mc-draws", "1000"})
              .code == 0);
  const auto csv = slurp(dir / "charfn.csv");
  CHECK(csv.rfind("family,n,t,re,im,modulus,oracle_modulus,abs_diff,mc_modulus,mc_se,ok\n", 0) == 0);
  const auto row = csv.find("exponential,1,0.5,");
  REQUIRE(row != std::string::npos);
  std::istringstream fields(csv.substr(row + 18));
  std::string re, im;
  std::getline(fields, re, ',');
  std::getline(fields, im, ',');
  CHECK(std::stod(re) == doctest::Approx(0.0111763480865).epsilon(1e-5));
  CHECK(std::stod(im) == doctest::Approx(0.0299343284303).epsilon(1e-5));
}
