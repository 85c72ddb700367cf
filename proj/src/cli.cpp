// SPDX-License-Identifier: Apache-2.0
#include "qwalk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/acceptance.hpp"
#include "qwalk/asymptotics.hpp"
#include "qwalk/correlations.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/format.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {
namespace {

struct RunConfig {
  std::string schedule = "cos:0.1";
  int horizon = 100;
  int window = 0;  // 0: same as horizon
  std::string coin = "sym";
  std::string output;

  bool with_references = false;

  int time = -1;
  bool even_only = false;
  std::string mixture = "none";
  int quadrature = 4096;

  std::string what = "constants";
  double weight = 1.0;
  std::string symmetry = "symmetric";

  int stride = 1;
  int grid = 24;

  bool quick = false;
  std::string tamper;
  std::vector<std::string> only;
};

CoinSpec parse_coin(const std::string& text) {
  if (text == "sym" || text == "symmetric") return CoinSpec::symmetric();
  if (text == "plus" || text == "up") return CoinSpec::up();
  if (text == "minus" || text == "down") return CoinSpec::down();
  if (text == "balanced") return CoinSpec::balanced();
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw ConfigError("");
    } catch (const std::exception&) {
      throw ConfigError("bad coin spec '" + text + "'");
    }
  }
  if (parts.size() != 4) throw ConfigError("coin spec needs sym|plus|minus|balanced or ar,ai,br,bi");
  CoinSpec c;
  c.plus = Complex(parts[0], parts[1]);
  c.minus = Complex(parts[2], parts[3]);
  if (std::abs(c.norm_squared() - 1.0) > 1e-12) throw ConfigError("coin spec '" + text + "' is not normalized");
  return c;
}

int window_for(const RunConfig& cfg) {
  if (cfg.horizon < 0) throw ConfigError("horizon must be >= 0");
  const int window = cfg.window > 0 ? cfg.window : std::max(cfg.horizon, 1);
  if (cfg.horizon > window) {
    throw HorizonExceeded("horizon " + std::to_string(cfg.horizon) + " exceeds the window half-width " +
                          std::to_string(window));
  }
  return window;
}

Trajectory simulate(const RunConfig& cfg, const std::string& schedule, const EvolveOptions& opts = {}) {
  const int window = window_for(cfg);
  return evolve(initial_state(parse_coin(cfg.coin), window), parse_schedule(schedule), cfg.horizon, opts);
}

void cmd_evolve(const RunConfig& cfg, std::ostream& out) {
  const Trajectory tr = simulate(cfg, cfg.schedule);
  std::optional<Trajectory> qw;
  std::optional<Trajectory> rw;
  out << "t,kappa,variance,entropy";
  if (cfg.with_references) {
    qw = simulate(cfg, "const:1");
    rw = simulate(cfg, "const:0");
    out << ",variance_qw,variance_rw,entropy_qw,entropy_rw";
  }
  out << '\n';
  for (size_t i = 0; i < tr.records.size(); ++i) {
    const StepRecord& r = tr.records[i];
    out << r.t << ',' << format_number(r.kappa) << ',' << format_number(r.variance) << ','
        << format_number(r.entropy);
    if (cfg.with_references) {
      out << ',' << format_number(qw->records[i].variance) << ',' << format_number(rw->records[i].variance) << ','
          << format_number(qw->records[i].entropy) << ',' << format_number(rw->records[i].entropy);
    }
    out << '\n';
  }
}

void cmd_distribution(RunConfig cfg, std::ostream& out) {
  const int t = cfg.time < 0 ? cfg.horizon : cfg.time;
  if (t > cfg.horizon) throw ConfigError("--time must not exceed --horizon");
  cfg.horizon = t;
  EvolveOptions opts;
  opts.keep_distributions = true;
  const Trajectory tr = simulate(cfg, cfg.schedule, opts);
  const PositionDistribution& sim = tr.distributions.back();

  std::optional<PositionDistribution> model;
  if (cfg.mixture != "none") {
    const DrivingSchedule schedule = parse_schedule(cfg.schedule);
    if (cfg.mixture == "abs-kappa") {
      const double w = asymptotics::mixture_weight(schedule, t, asymptotics::MixtureWeight::abs_kappa);
      model = asymptotics::mixture_distribution(t, w, cfg.quadrature);
    } else if (cfg.mixture == "signed-kappa") {
      const double w = asymptotics::mixture_weight(schedule, t, asymptotics::MixtureWeight::signed_kappa);
      model = asymptotics::signed_mixture_distribution(t, w, cfg.quadrature);
    } else {
      throw ConfigError("--mixture must be none, abs-kappa or signed-kappa");
    }
  }
  const double tv = model ? total_variation(sim, *model) : 0.0;
  out << "x,P_simulated" << (model ? ",P_asymptotic_mixture,tv_distance" : "") << '\n';
  for (int x = -t; x <= t; x += 2) {
    if (cfg.even_only && x % 2 != 0) continue;
    out << x << ',' << format_number(sim.at(x));
    if (model) out << ',' << format_number(model->at(x)) << ',' << format_number(tv);
    out << '\n';
  }
}

void write_distribution(const PositionDistribution& p, std::ostream& out) {
  out << "x,P\n";
  for (int x = p.x_min; x <= p.x_max(); ++x) {
    if (p.at(x) == 0.0) continue;
    out << x << ',' << format_number(p.at(x)) << '\n';
  }
}

void cmd_asymptotic(const RunConfig& cfg, std::ostream& out) {
  if (cfg.what == "constants") {
    const auto c = asymptotics::ballistic_constants(cfg.quadrature);
    out << "quantity,value\n"
        << "C1," << format_number(c.c1) << '\n'
        << "C2," << format_number(c.c2) << '\n'
        << "variance_coefficient," << format_number(c.variance_coefficient) << '\n'
        << "analytic_C," << format_number(c.analytic) << '\n';
  } else if (cfg.what == "variance") {
    if (!(cfg.weight >= 0.0 && cfg.weight <= 1.0)) throw ConfigError("--weight must lie in [0, 1]");
    out << "t,variance\n";
    for (int t = 0; t <= cfg.horizon; ++t) out << t << ',' << format_number(asymptotics::mixture_variance(t, cfg.weight)) << '\n';
  } else if (cfg.what == "distribution") {
    const int t = cfg.time < 0 ? cfg.horizon : cfg.time;
    const auto sym = cfg.symmetry == "biased" ? asymptotics::CoinSymmetry::biased : asymptotics::CoinSymmetry::symmetric;
    if (cfg.symmetry != "biased" && cfg.symmetry != "symmetric") throw ConfigError("--symmetry must be symmetric or biased");
    if (!(cfg.weight >= 0.0 && cfg.weight <= 1.0)) throw ConfigError("--weight must lie in [0, 1]");
    write_distribution(asymptotics::mixture_distribution(t, cfg.weight, std::max(cfg.quadrature, 8 * t), sym), out);
  } else if (cfg.what == "binomial") {
    write_distribution(asymptotics::binomial_distribution(cfg.time < 0 ? cfg.horizon : cfg.time), out);
  } else {
    throw ConfigError("--what must be constants, variance, distribution or binomial");
  }
}

void cmd_correlations(const RunConfig& cfg, std::ostream& out) {
  window_for(cfg);
  OptimizerConfig opt;
  opt.grid = cfg.grid;
  const auto records =
      correlation_trajectory(parse_schedule(cfg.schedule), cfg.horizon, cfg.stride, parse_coin(cfg.coin), opt);
  out << "t,mutual_info,classical_corr,discord,mid,theta_opt,phi_opt,warn\n";
  for (const auto& r : records) {
    out << r.t << ',' << format_number(r.mutual_info) << ',' << format_number(r.classical_corr) << ','
        << format_number(r.discord) << ',' << format_number(r.mid) << ',' << format_number(r.argmax.theta) << ','
        << format_number(r.argmax.phi) << ',' << (r.optimizer_warning ? 1 : 0) << '\n';
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  acceptance::Options opts;
  opts.quick = cfg.quick;
  opts.tamper = cfg.tamper;
  opts.only = cfg.only;
  for (const auto& name : opts.only) {
    const auto& names = acceptance::check_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw ConfigError("unknown check '" + name + "'");
  }
  const auto results = acceptance::run(opts);
  acceptance::print_report(out, results);
  if (acceptance::all_passed(results)) return exit_ok;
  err << "failed checks:";
  for (const auto& r : results) {
    if (!r.pass) err << ' ' << r.name;
  }
  err << '\n';
  return exit_verify_failed;
}

// key=value lines; '#' starts a comment. Keys are long option names without dashes.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    args.push_back("--" + trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
  }
  return args;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Driven quantum walk simulator: evolution, asymptotics, correlations and the acceptance suite"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  auto common = [&cfg](CLI::App* sub, bool schedule = true) {
    if (schedule) sub->add_option("--schedule", cfg.schedule, "cos:<eta> | const:<c> | saw[:<p>:<lo>:<hi>] | piecewise:<t0>-<t1>=<v>,... | table:<v0>,...");
    sub->add_option("--horizon", cfg.horizon, "number of steps");
    sub->add_option("--window", cfg.window, "lattice half-width T_max (default: horizon)");
    sub->add_option("--coin", cfg.coin, "sym | plus | minus | balanced | ar,ai,br,bi");
    sub->add_option("--output,-o", cfg.output, "write CSV to this file");
    sub->add_option("--config", "key=value file; command-line flags override it");
  };

  auto* evolve_cmd = app.add_subcommand("evolve", "variance and entropy per step");
  common(evolve_cmd);
  evolve_cmd->add_flag("--with-references", cfg.with_references, "add unitary and fully dephased reference columns");

  auto* dist_cmd = app.add_subcommand("distribution", "position distribution at one time");
  common(dist_cmd);
  dist_cmd->add_option("--time", cfg.time, "snapshot time (default: horizon)");
  dist_cmd->add_flag("--even-only", cfg.even_only, "only even x");
  dist_cmd->add_option("--mixture", cfg.mixture, "none | abs-kappa | signed-kappa");
  dist_cmd->add_option("--nk", cfg.quadrature, "quadrature points for the asymptotic profile");

  auto* asym_cmd = app.add_subcommand("asymptotic", "closed-form constants, variances and distributions");
  common(asym_cmd, false);
  asym_cmd->add_option("--what", cfg.what, "constants | variance | distribution | binomial");
  asym_cmd->add_option("--weight", cfg.weight, "quantum weight w in [0, 1]");
  asym_cmd->add_option("--time", cfg.time, "time for distribution/binomial (default: horizon)");
  asym_cmd->add_option("--symmetry", cfg.symmetry, "symmetric | biased");
  asym_cmd->add_option("--nk", cfg.quadrature, "quadrature points");

  auto* corr_cmd = app.add_subcommand("correlations", "mutual information, classical correlation, discord, MID");
  common(corr_cmd);
  corr_cmd->add_option("--stride", cfg.stride, "record every n-th step");
  corr_cmd->add_option("--grid", cfg.grid, "measurement grid resolution before refinement");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_flag("--quick", cfg.quick, "t <= 50, N_k = 1024");
  verify_cmd->add_option("--tamper", cfg.tamper, "corrupt the reference value of this check");
  verify_cmd->add_option("--only", cfg.only, "run only these checks");
  verify_cmd->add_option("--config", "key=value file; command-line flags override it");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);  // CLI11 takes reversed order
  try {
    // Config values go first (i.e. last in reversed order) so explicit flags win under TakeLast.
    for (size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i > 0) {
        path = args[i - 1];
      } else if (args[i].rfind("--config=", 0) == 0) {
        path = args[i].substr(9);
      }
      if (path.empty()) continue;
      const auto extra = read_config(path);
      // Insert right after the subcommand name, which sits at the end of the reversed list.
      auto at = args.end() - 1;
      for (const auto& e : extra) at = args.insert(at, e);
      break;
    }
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file = std::make_unique<std::ofstream>(cfg.output);
    if (!*file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return exit_usage;
    }
    sink = file.get();
  }

  try {
    if (*evolve_cmd) {
      cmd_evolve(cfg, *sink);
    } else if (*dist_cmd) {
      cmd_distribution(cfg, *sink);
    } else if (*asym_cmd) {
      cmd_asymptotic(cfg, *sink);
    } else if (*corr_cmd) {
      cmd_correlations(cfg, *sink);
    } else if (*verify_cmd) {
      return cmd_verify(cfg, *sink, err);
    }
  } catch (const HorizonExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_horizon;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace qwalk
