/*
    Copyright (C) 2026 The glslab Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "glslab/errors.hpp"
#include "glslab/psi.hpp"
#include "glslab/young.hpp"

namespace glslab::cli {

namespace {

const std::vector<std::string> kCommands = {"norms", "counterexample", "montecarlo", "embedding"};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string& text, const std::string& what) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParameterError(what + ": '" + text + "' is not a number");
  return v;
}

int to_int(const std::string& text, const std::string& what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParameterError(what + ": '" + text + "' is not an integer");
  return v;
}

bool is_command(const std::string& name) {
  return std::find(kCommands.begin(), kCommands.end(), name) != kCommands.end();
}

void apply_json(const nlohmann::json& j, RunConfig& cfg) {
  auto take = [&j](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  take("beta", cfg.beta);
  take("profile", cfg.profile);
  take("nmax", cfg.nmax);
  take("seed", cfg.seed);
  take("out", cfg.out);
  take("p-grid", cfg.p_grid);
  take("u-grid", cfg.u_grid);
  take("tol", cfg.tol);
  take("draws", cfg.draws);
  take("epsilon", cfg.epsilon);
  take("symmetrize", cfg.symmetrize);
  take("cert-k-last", cfg.cert_k_last);
  take("mode", cfg.mode);
  take("phi", cfg.phi);
  take("psi", cfg.psi);
  take("lambdas", cfg.lambdas);
}

template <typename F>
void check(std::vector<std::string>& problems, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    problems.emplace_back(e.what());
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error([&problems] {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems) msg += "\n  - " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

std::string default_p_grid(const std::string& command) {
  if (command == "counterexample") return "gaps:6:20";
  return "1,2,3";
}

std::string default_u_grid(const std::string& command) {
  if (command == "embedding") return "geometric:1:1e4:200";
  return "0.5,1,1.5,2,4,8";
}

std::string default_phi(const std::string& command, const std::string& mode) {
  if (command == "embedding" && mode == "orlicz") return "exp-linear";
  return "power-singular:0.125:4";
}

std::string default_psi(const std::string& command, const std::string& mode) {
  if (command == "embedding" && mode == "orlicz") return "exp-square";
  if (command == "embedding") return "constant:1:1:4";
  return "moment-power:0.5";
}

std::vector<double> parse_grid(const std::string& spec, const std::string& what) {
  if (spec.empty()) throw ParameterError(what + " is empty");
  const auto parts = split(spec, ':');
  std::vector<double> out;
  if (parts[0] == "gaps") {
    for (double gap : parse_gaps(spec, what)) out.push_back(4.0 - gap);
    return out;
  }
  if (parts[0] == "geometric") {
    if (parts.size() != 4) throw ParameterError(what + ": expected geometric:<lo>:<hi>:<points>");
    const double lo = to_double(parts[1], what);
    const double hi = to_double(parts[2], what);
    const int points = to_int(parts[3], what);
    if (!(lo > 0.0 && hi > lo) || points < 2) {
      throw ParameterError(what + ": geometric grid needs 0 < lo < hi and at least 2 points");
    }
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) out.push_back(i + 1 == points ? hi : lo * std::exp(step * i));
    return out;
  }
  for (const auto& item : split(spec, ',')) out.push_back(to_double(item, what));
  return out;
}

std::vector<double> parse_gaps(const std::string& spec, const std::string& what) {
  const auto parts = split(spec, ':');
  std::vector<double> out;
  if (!parts.empty() && parts[0] == "gaps") {
    if (parts.size() != 3) throw ParameterError(what + ": expected gaps:<k0>:<k1>");
    const int k0 = to_int(parts[1], what);
    const int k1 = to_int(parts[2], what);
    if (k0 < 0 || k1 < k0 || k1 > 1000) throw ParameterError(what + ": need 0 <= k0 <= k1 <= 1000");
    for (int k = k0; k <= k1; ++k) out.push_back(std::ldexp(1.0, -k));
    return out;
  }
  for (double p : parse_grid(spec, what)) out.push_back(4.0 - p);
  return out;
}

UnitIntervalFunction parse_profile(const std::string& tag) {
  const auto parts = split(tag, ':');
  if (parts[0] == "constant" && parts.size() == 2) {
    return UnitIntervalFunction::constant(to_double(parts[1], "profile"));
  }
  if (parts[0] == "sqrt-log" && parts.size() == 1) return UnitIntervalFunction::sqrt_log();
  if (parts[0] == "indicator" && (parts.size() == 2 || parts.size() == 3)) {
    const double height = parts.size() == 3 ? to_double(parts[2], "profile") : 1.0;
    return UnitIntervalFunction::indicator(to_double(parts[1], "profile"), height);
  }
  throw ParameterError("profile: unknown tag '" + tag +
                       "' (expected constant:<c>, sqrt-log or indicator:<mass>[:<height>])");
}

std::vector<std::string> validate(const RunConfig& cfg) {
  std::vector<std::string> problems;
  if (!is_command(cfg.command)) {
    problems.push_back("command: '" + cfg.command +
                       "' is not one of norms, counterexample, montecarlo, embedding");
  }
  if (!(cfg.beta > 0.0) || !std::isfinite(cfg.beta)) problems.push_back("beta: must be positive");
  check(problems, [&] {
    const auto f = parse_profile(cfg.profile);
    if (f.empty()) throw ParameterError("profile: must be non-zero");
  });
  if (cfg.nmax < 10) problems.push_back("nmax: must be at least 10");
  if (cfg.nmax > 10000000) problems.push_back("nmax: at most 1e7 blocks are supported");
  check(problems, [&] {
    for (double p : parse_grid(cfg.p_grid, "p-grid")) {
      if (!(p >= 1.0)) throw ParameterError("p-grid: values must be >= 1");
    }
  });
  check(problems, [&] {
    const auto u = parse_grid(cfg.u_grid, "u-grid");
    for (std::size_t i = 1; i < u.size(); ++i) {
      if (!(u[i] > u[i - 1])) throw ParameterError("u-grid: must be strictly increasing");
    }
  });
  if (!(cfg.tol > 0.0 && cfg.tol < 1e-2)) problems.push_back("tol: must lie in (0, 1e-2)");
  if (cfg.draws < 1) problems.push_back("draws: must be at least 1");
  if (!(cfg.epsilon > 0.0)) problems.push_back("epsilon: must be positive");
  if (cfg.cert_k_last < 10 || cfg.cert_k_last > 1000) {
    problems.push_back("cert-k-last: must lie in [10, 1000]");
  }
  if (cfg.mode != "gls" && cfg.mode != "orlicz") problems.push_back("mode: must be gls or orlicz");
  if (cfg.mode == "orlicz") {
    check(problems, [&] { YoungFunction::from_record(cfg.phi); });
    check(problems, [&] { YoungFunction::from_record(cfg.psi); });
    check(problems, [&] {
      for (double l : parse_grid(cfg.lambdas, "lambdas")) {
        if (!(l > 0.0)) throw ParameterError("lambdas: values must be positive");
      }
    });
  } else {
    check(problems, [&] { PsiFunction::from_record(cfg.phi); });
    check(problems, [&] { PsiFunction::from_record(cfg.psi); });
  }
  return problems;
}

void finalize(RunConfig& cfg) {
  if (cfg.p_grid.empty()) cfg.p_grid = default_p_grid(cfg.command);
  if (cfg.u_grid.empty()) cfg.u_grid = default_u_grid(cfg.command);
  if (cfg.phi.empty()) cfg.phi = default_phi(cfg.command, cfg.mode);
  if (cfg.psi.empty()) cfg.psi = default_psi(cfg.command, cfg.mode);
  auto problems = validate(cfg);
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

bool parse_args(int argc, const char* const* argv, RunConfig& cfg, std::string& help) {
  CLI::App app{"Numerical laboratory for grand Lebesgue, Orlicz and Lorentz norms"};
  app.set_version_flag("--version", "glslab 0.1.0");
  RunConfig flags;
  std::string config_path;
  app.add_option("command", flags.command, "norms | counterexample | montecarlo | embedding")
      ->required();
  app.add_option("--config", config_path, "JSON file with option values; flags take precedence");
  app.add_option("--beta", flags.beta, "block growth exponent (default 1)");
  app.add_option("--profile", flags.profile,
                 "constant:<c> | sqrt-log | indicator:<mass>[:<height>] (default constant:1)");
  app.add_option("--nmax", flags.nmax, "number of blocks (default 100000)");
  app.add_option("--seed", flags.seed, "master seed (default 1)");
  app.add_option("--out", flags.out, "directory for CSV tables (default: stdout)");
  app.add_option("--p-grid", flags.p_grid, "list a,b,c or gaps:<k0>:<k1> for p = 4 - 2^-k");
  app.add_option("--u-grid", flags.u_grid, "list a,b,c or geometric:<lo>:<hi>:<points>");
  app.add_option("--tol", flags.tol, "relative quadrature tolerance (default 1e-9)");
  app.add_option("--draws", flags.draws, "Monte Carlo draws (default 100000)");
  app.add_option("--epsilon", flags.epsilon, "exceedance level for the summability check (default 0.5)");
  app.add_flag("--symmetrize", flags.symmetrize, "attach Rademacher signs to the blocks");
  app.add_option("--cert-k-last", flags.cert_k_last, "last k of the certificate grid (default 256)");
  app.add_option("--mode", flags.mode, "embedding mode: gls | orlicz (default gls)");
  app.add_option("--phi", flags.phi, "psi-function or Young function record");
  app.add_option("--psi", flags.psi, "psi-function or Young function record");
  app.add_option("--lambdas", flags.lambdas, "scales for the Orlicz comparison (default 0.5,1,2,4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help = app.help();
    return false;
  } catch (const CLI::CallForVersion&) {
    help = "glslab 0.1.0\n";
    return false;
  } catch (const CLI::ParseError& e) {
    throw ValidationError({e.what()});
  }

  cfg = RunConfig{};
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ValidationError({"config: cannot open '" + config_path + "'"});
    try {
      apply_json(nlohmann::json::parse(in), cfg);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError({"config: " + std::string(e.what())});
    }
  }
  cfg.command = flags.command;
  auto given = [&app](const char* name) { return app.count(name) > 0; };
  if (given("--beta")) cfg.beta = flags.beta;
  if (given("--profile")) cfg.profile = flags.profile;
  if (given("--nmax")) cfg.nmax = flags.nmax;
  if (given("--seed")) cfg.seed = flags.seed;
  if (given("--out")) cfg.out = flags.out;
  if (given("--p-grid")) cfg.p_grid = flags.p_grid;
  if (given("--u-grid")) cfg.u_grid = flags.u_grid;
  if (given("--tol")) cfg.tol = flags.tol;
  if (given("--draws")) cfg.draws = flags.draws;
  if (given("--epsilon")) cfg.epsilon = flags.epsilon;
  if (given("--symmetrize")) cfg.symmetrize = flags.symmetrize;
  if (given("--cert-k-last")) cfg.cert_k_last = flags.cert_k_last;
  if (given("--mode")) cfg.mode = flags.mode;
  if (given("--phi")) cfg.phi = flags.phi;
  if (given("--psi")) cfg.psi = flags.psi;
  if (given("--lambdas")) cfg.lambdas = flags.lambdas;
  finalize(cfg);
  return true;
}

}  // namespace glslab::cli
