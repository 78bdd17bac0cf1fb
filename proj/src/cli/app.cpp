#include "benford/cli.hpp"

#include "benford/errors.hpp"
#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace benford::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "1.0.0";

void add_family_options(CLI::App* sub, FamilyOptions& f) {
  sub->add_option("--family", f.family,
                  "geometric | powerlaw | uniform-disc | exponential | frechet | uniform-cont | point-mass");
  sub->add_option("--p", f.p, "geometric success probability schedule");
  sub->add_option("--eps", f.eps, "power-law exponent excess schedule");
  sub->add_option("--a", f.a, "uniform lower end schedule");
  sub->add_option("--b", f.b, "uniform upper end schedule");
  sub->add_option("--lambda", f.lambda, "exponential rate schedule");
  sub->add_option("--alpha", f.alpha, "Frechet shape schedule");
  sub->add_option("--value", f.value, "point mass location schedule");
}

void add_rate_options(CLI::App* sub, RateOptions& r) {
  sub->add_option("--rate-alpha", r.rate_alpha, "rate constant alpha");
  sub->add_option("--beta", r.beta, "rate constant beta");
  sub->add_option("--gamma", r.gamma, "rate constant gamma");
  sub->add_option("--delta", r.delta, "rate constant delta");
  sub->add_option("--theta", r.theta, "growth exponent of d_n, or 'auto'");
  sub->add_option("--c0", r.c0, "rate constant c0");
  sub->add_option("--c1", r.c1, "rate constant c1");
  sub->add_option("--c2", r.c2, "rate constant c2");
  sub->add_option("--C0", r.C0, "scale of the almost-sure constant");
  sub->add_option("--r", r.r, "schedule r_n");
}

std::string json_to_option_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string s;
    for (const auto& item : v) {
      if (!s.empty()) s += ',';
      s += json_to_option_text(item);
    }
    return s;
  }
  throw ConfigError("config: unsupported value " + v.dump());
}

CLI::Option* find_option(CLI::App* app, const std::string& key) {
  std::string name = key;
  std::replace(name.begin(), name.end(), '_', '-');
  if (auto* opt = app->get_option_no_throw("--" + name)) return opt;
  return app->get_option_no_throw("--" + key);
}

// Config file values become option defaults, so explicit flags still win.
bool apply_config(CLI::App& app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  bool sets_threads = false;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      CLI::App* sub = nullptr;
      try {
        sub = app.get_subcommand(key);
      } catch (const CLI::OptionNotFound&) {
        throw ConfigError("config: unknown section '" + key + "'");
      }
      for (const auto& [inner, v] : value.items()) {
        auto* opt = find_option(sub, inner);
        if (!opt) throw ConfigError("config: unknown key '" + key + "." + inner + "'");
        opt->default_val(json_to_option_text(v));
      }
      continue;
    }
    if (key == "config") throw ConfigError("config: 'config' cannot be set from a config file");
    auto* opt = find_option(&app, key);
    if (!opt) throw ConfigError("config: unknown key '" + key + "'");
    opt->default_val(json_to_option_text(value));
    sets_threads = sets_threads || opt->get_name() == "--threads";
  }
  return sets_threads;
}

std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

json option_echo(const CLI::App* app) {
  json j = json::object();
  for (const auto* opt : app->get_options()) {
    if (opt->get_lnames().empty() || opt->get_name() == "--help") continue;
    const auto& results = opt->results();
    std::string text;
    if (results.empty()) {
      text = opt->get_default_str();
    } else {
      for (const auto& r : results) text += (text.empty() ? "" : ",") + r;
    }
    j[opt->get_lnames().front()] = text;
  }
  return j;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benford-law experiments: digit tables, discrepancy trajectories, bound checks and "
               "characteristic functions.",
               "benford"};
  app.option_defaults()->always_capture_default();
  // -h is left free: --h is the harmonic grid flag.
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--out-dir", g.out_dir, "directory for CSV and manifest output");
  app.add_option("--config", g.config, "JSON config file (flags override it)");
  auto* threads_opt = app.add_option("--threads", g.threads, "worker threads (fallback: BENFORD_THREADS)");

  Table1Options t1;
  auto* table1 = app.add_subcommand("table1", "first-digit frequencies of (X_n^d), X_n uniform on [1, n]");
  table1->set_help_flag("--help", "print help and exit");
  table1->add_option("--n", t1.n, "sequence length N");
  table1->add_option("--d", t1.d, "exponent schedule d_n");
  table1->add_option("--replicates", t1.replicates, "independent replicates");

  DiscrepancyOptions disc;
  auto* discrepancy = app.add_subcommand("discrepancy", "Benford discrepancy trajectories with the rate overlay");
  discrepancy->set_help_flag("--help", "print help and exit");
  add_family_options(discrepancy, disc.family);
  discrepancy->add_option("--d", disc.d, "exponent schedule d_n");
  discrepancy->add_option("--n", disc.n, "sequence length N");
  discrepancy->add_option("--checkpoints", disc.checkpoints, "list of N values, or 'auto'");
  discrepancy->add_option("--replicates", disc.replicates, "independent replicates");
  add_rate_options(discrepancy, disc.rate);

  BoundsOptions bo;
  bo.family.family = "auto";
  bo.rate.gamma = 0.5;
  bo.rate.c1 = 8.0;
  bo.rate.c2 = 5.0;
  bo.rate.r = "poly:c=1,theta=-0.5";
  auto* bounds = app.add_subcommand("bounds", "exhaustive checks of the analytic inequalities");
  bounds->set_help_flag("--help", "print help and exit");
  bounds->add_option("--check", bo.check, "lemma4 | vdc | prop2 | prop3");
  bounds->add_option("--k", bo.k, "k grid (lemma4)");
  bounds->add_option("--h", bo.h, "h grid, or 'auto'");
  bounds->add_option("--n", bo.n, "n grid, or 'auto'");
  bounds->add_option("--bound", bo.bound, "prop3 constant: literal | endpoint");
  add_family_options(bounds, bo.family);
  add_rate_options(bounds, bo.rate);

  CharfnOptions cf;
  auto* charfn = app.add_subcommand("charfn", "characteristic functions of ln X_n against the oracle");
  charfn->set_help_flag("--help", "print help and exit");
  charfn->add_option("--family", cf.family, "a family name or 'all'");
  charfn->add_option("--p", cf.params.p, "geometric success probability schedule");
  charfn->add_option("--eps", cf.params.eps, "power-law exponent excess schedule");
  charfn->add_option("--a", cf.params.a, "uniform lower end schedule");
  charfn->add_option("--b", cf.params.b, "uniform upper end schedule");
  charfn->add_option("--lambda", cf.params.lambda, "exponential rate schedule");
  charfn->add_option("--alpha", cf.params.alpha, "Frechet shape schedule");
  charfn->add_option("--value", cf.params.value, "point mass location schedule");
  charfn->add_option("--n", cf.n, "n grid");
  charfn->add_option("--t", cf.t, "frequency grid");
  charfn->add_option("--tol", cf.tol, "absolute tolerance");
  charfn->add_option("--mc-draws", cf.mc_draws, "Monte Carlo draws per row (0 disables)");

  WeylOptions wo;
  auto* weyl = app.add_subcommand("weyl", "Weyl sums and the Erdos-Turan bound");
  weyl->set_help_flag("--help", "print help and exit");
  weyl->add_option("--source", wo.source, "pow2 | family");
  add_family_options(weyl, wo.family);
  weyl->add_option("--d", wo.d, "exponent schedule d_n (family source)");
  weyl->add_option("--n", wo.n, "number of points");
  weyl->add_option("--H", wo.H, "largest harmonic");
  weyl->add_option("--safety", wo.safety, "multiplier on the bound");

  const auto started = std::chrono::steady_clock::now();
  const std::string started_utc = utc_timestamp();
  try {
    bool config_threads = false;
    const auto config_path = find_config_path(args);
    if (!config_path.empty()) config_threads = apply_config(app, config_path);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (threads_opt->count() == 0 && !config_threads) {
      if (const char* env = std::getenv("BENFORD_THREADS")) {
        try {
          g.threads = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
          throw ConfigError(std::string("BENFORD_THREADS is not a number: ") + env);
        }
      }
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  CommandResult result;
  try {
    if (command == "table1") result = cmd_table1(g, t1, out, err);
    else if (command == "discrepancy") result = cmd_discrepancy(g, disc, out, err);
    else if (command == "bounds") result = cmd_bounds(g, bo, out, err);
    else if (command == "charfn") result = cmd_charfn(g, cf, out, err);
    else result = cmd_weyl(g, wo, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  }

  try {
    const fs::path dir(g.out_dir);
    fs::create_directories(dir);
    json files = json::array();
    for (const auto& f : result.files) {
      write_file(dir / f.name, f.content);
      files.push_back({{"path", f.name}, {"sha256", sha256_hex(f.content)}, {"bytes", f.content.size()}});
    }
    json manifest;
    manifest["artifact"] = "benford";
    manifest["version"] = kVersion;
    manifest["command"] = command;
    manifest["master_seed"] = g.seed;
    manifest["config"] = {{"global", option_echo(&app)}, {command, option_echo(chosen)}};
    manifest["config_file"] = g.config;
    manifest["exit_code"] = result.exit_code;
    manifest["files"] = files;
    manifest["started_utc"] = started_utc;
    manifest["wall_clock_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return result.exit_code;
}

}  // namespace benford::cli
