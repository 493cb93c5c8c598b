// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through omg.h.
//
// Exit codes: 0 pass, 1 usage or input error, 2 refuted or failed check,
// 3 inconclusive.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "omg/omg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;
constexpr int kExitInconclusive = 3;

struct GameDeleter {
  void operator()(omg_game* g) const { omg_game_free(g); }
};
using GamePtr = std::unique_ptr<omg_game, GameDeleter>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { omg_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void check(omg_status s) {
  if (s != OMG_OK) throw CliError(kExitUsage, omg_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitUsage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_vector(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliError(kExitUsage, std::string("cannot parse ") + what + " component '" + item + "'");
    }
  }
  if (out.empty()) throw CliError(kExitUsage, std::string(what) + " is empty");
  return out;
}

struct GameArgs {
  std::string game;
  std::string params;
  std::size_t n = 0;
  std::size_t m = 0;
};

void add_game_options(CLI::App* cmd, GameArgs& g) {
  cmd->add_option("--game", g.game, "builtin:<id> or a GameSpec JSON file")->required();
  cmd->add_option("--params", g.params, "JSON object overriding builtin parameters");
  cmd->add_option("--n", g.n, "wgan: data dimension");
  cmd->add_option("--m", g.m, "wgan: latent dimension");
}

GamePtr load_game(const GameArgs& g) {
  omg_game* raw = nullptr;
  const std::string prefix = "builtin:";
  if (g.game.rfind(prefix, 0) == 0) {
    const std::string id = g.game.substr(prefix.size());
    nlohmann::json params = nlohmann::json::object();
    if (!g.params.empty()) {
      try {
        params = nlohmann::json::parse(g.params);
      } catch (const nlohmann::json::exception& e) {
        throw CliError(kExitUsage, std::string("--params: ") + e.what());
      }
    }
    if (g.n > 0 || g.m > 0) {
      if (id != "wgan" && id != "wgan_affine") throw CliError(kExitUsage, "--n/--m apply to the wgan game only");
      params["x"] = nlohmann::json::array({std::vector<double>(g.n > 0 ? g.n : 1, 1.0)});
      params["z"] = nlohmann::json::array({std::vector<double>(g.m > 0 ? g.m : 1, 1.0)});
    }
    const std::string p = params.empty() ? std::string() : params.dump();
    check(omg_game_create_builtin(id.c_str(), p.empty() ? nullptr : p.c_str(), &raw));
  } else {
    if (!g.params.empty() || g.n > 0 || g.m > 0) {
      throw CliError(kExitUsage, "--params/--n/--m apply to builtin games only");
    }
    check(omg_game_create_json(read_file(g.game).c_str(), &raw));
  }
  return GamePtr(raw);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kExitUsage, "cannot write " + output);
  out << text;
}

omg_learner parse_learner(const std::string& s) {
  if (s == "ogd") return OMG_LEARNER_OGD;
  if (s == "omod") return OMG_LEARNER_OMOD;
  if (s == "omomd") return OMG_LEARNER_OMOMD;
  throw CliError(kExitUsage, "unknown learner '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online monotone games: certify, classify, integrate and reproduce"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(omg_version()));

  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int nodes = 16;
  std::string output;

  GameArgs certify_game;
  auto* certify = app.add_subcommand("certify", "Sampled monotonicity certificate (JSON)");
  add_game_options(certify, certify_game);
  certify->add_option("--samples", samples, "Jacobian and pair samples (default 1000)");
  certify->add_option("--seed", seed, "Sampling seed");

  GameArgs classify_game;
  auto* classify = app.add_subcommand("classify", "Smooth / convex / monotone / socially convex report (JSON)");
  add_game_options(classify, classify_game);
  classify->add_option("--samples", samples, "Samples per property (default 500)");
  classify->add_option("--seed", seed, "Sampling seed");

  GameArgs integrate_game;
  std::string o_text;
  std::string x_text;
  auto* integrate = app.add_subcommand("integrate", "Path-integral loss from o to x");
  add_game_options(integrate, integrate_game);
  integrate->add_option("--o", o_text, "Origin, comma separated")->required();
  integrate->add_option("--x", x_text, "Endpoint, comma separated")->required();
  integrate->add_option("--nodes", nodes, "Gauss-Legendre nodes");

  GameArgs eq_game;
  double tol = 1e-8;
  std::size_t max_iter = 100000;
  auto* equilibrium = app.add_subcommand("equilibrium", "Projected extragradient equilibrium (JSON)");
  add_game_options(equilibrium, eq_game);
  equilibrium->add_option("--tol", tol, "Natural residual tolerance");
  equilibrium->add_option("--max-iter", max_iter, "Iteration cap");

  GameArgs run_game;
  std::string config_path;
  std::size_t T = 1000;
  double eta = 0.0;
  std::string learner = "omomd";
  std::string format = "csv";
  auto* run = app.add_subcommand("run", "Online learner on one game, or an experiment config");
  auto* run_game_opt = run->add_option("--game", run_game.game, "builtin:<id> or a GameSpec JSON file");
  run->add_option("--params", run_game.params, "JSON object overriding builtin parameters");
  run->add_option("--n", run_game.n, "wgan: data dimension");
  run->add_option("--m", run_game.m, "wgan: latent dimension");
  auto* config_opt = run->add_option("--config", config_path, "ExperimentConfig JSON file");
  run_game_opt->excludes(config_opt);
  run->add_option("--T", T, "Horizon");
  run->add_option("--eta", eta, "Step size (default: automatic)");
  run->add_option("--learner", learner, "ogd, omod or omomd");
  run->add_option("--nodes", nodes, "Gauss-Legendre nodes");
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--output", output, "Output file (game runs) or directory (configs)");

  std::string which;
  std::size_t jobs = 1;
  auto* reproduce = app.add_subcommand("reproduce", "Run a reproduction suite with canonical defaults");
  reproduce->add_option("which", which, "fig4, table1, regret-bound or counterexample")
      ->required()
      ->check(CLI::IsMember({"fig4", "table1", "regret-bound", "counterexample"}));
  reproduce->add_option("--seed", seed, "Seed (fig4: pool seed)");
  reproduce->add_option("--jobs", jobs, "Worker threads");
  reproduce->add_option("--output", output, "Artifact root (default $MG_OUT_DIR or ./out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (certify->parsed()) {
      GamePtr g = load_game(certify_game);
      omg_verdict verdict = OMG_VERDICT_INCONCLUSIVE;
      OwnedString report;
      check(omg_certify(g.get(), samples ? samples : 1000, seed, &verdict, &report.p));
      std::cout << report.str() << '\n';
      if (verdict == OMG_VERDICT_MONOTONE) return kExitOk;
      return verdict == OMG_VERDICT_NOT_MONOTONE ? kExitFailed : kExitInconclusive;
    }
    if (classify->parsed()) {
      GamePtr g = load_game(classify_game);
      OwnedString report;
      check(omg_classify(g.get(), samples ? samples : 500, seed, &report.p));
      std::cout << report.str() << '\n';
      return kExitOk;
    }
    if (integrate->parsed()) {
      GamePtr g = load_game(integrate_game);
      const auto o = parse_vector(o_text, "--o");
      const auto x = parse_vector(x_text, "--x");
      if (o.size() != x.size()) throw CliError(kExitUsage, "--o and --x differ in length");
      double value = 0.0;
      const char* method = nullptr;
      check(omg_path_loss(g.get(), o.data(), x.data(), o.size(), nodes, &value, &method, nullptr));
      std::printf("%.10f %s\n", value, method);
      return kExitOk;
    }
    if (equilibrium->parsed()) {
      GamePtr g = load_game(eq_game);
      OwnedString report;
      check(omg_equilibrium(g.get(), tol, max_iter, nullptr, 0, &report.p));
      std::cout << report.str() << '\n';
      return nlohmann::json::parse(report.str()).at("converged").get<bool>() ? kExitOk : kExitFailed;
    }
    if (run->parsed()) {
      if (!config_path.empty()) {
        int passed = 0;
        OwnedString summary;
        check(omg_run_config(read_file(config_path).c_str(), output.empty() ? nullptr : output.c_str(), &passed,
                             &summary.p));
        std::cout << summary.str() << '\n';
        return passed ? kExitOk : kExitFailed;
      }
      if (run_game.game.empty()) throw CliError(kExitUsage, "run needs --game or --config");
      GamePtr g = load_game(run_game);
      OwnedString csv;
      OwnedString summary;
      check(omg_run_online(g.get(), parse_learner(learner), eta, T, nodes, &csv.p, &summary.p));
      emit(format == "csv" ? csv.str() : summary.str(), output);
      return kExitOk;
    }
    if (reproduce->parsed()) {
      int passed = 0;
      OwnedString report;
      check(omg_reproduce(which.c_str(), seed, jobs, output.empty() ? nullptr : output.c_str(), &passed,
                          &report.p));
      std::cout << report.str() << '\n';
      if (!passed) {
        const auto failed = nlohmann::json::parse(report.str()).value("failed", nlohmann::json::array());
        std::cerr << "reproduce " << which << ": failed";
        for (const auto& f : failed) std::cerr << ' ' << f.get<std::string>();
        std::cerr << '\n';
        return kExitFailed;
      }
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "omg: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "omg: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
