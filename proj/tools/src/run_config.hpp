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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "glslab/function.hpp"

namespace glslab::cli {

// All violations found while validating a configuration, in field order.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct RunConfig {
  std::string command;
  double beta = 1.0;
  std::string profile = "constant:1";
  std::uint64_t nmax = 100000;
  std::uint64_t seed = 1;
  std::string out;  // directory for CSV tables; stdout when empty
  // Comma-separated values, or gaps:<k0>:<k1> for p = 4 - 2^-k.
  std::string p_grid;
  // Comma-separated values, or geometric:<lo>:<hi>:<points>.
  std::string u_grid;
  double tol = 1e-9;
  std::uint64_t draws = 100000;
  double epsilon = 0.5;
  bool symmetrize = false;
  int cert_k_last = 256;
  std::string mode = "gls";
  std::string phi;
  std::string psi;
  std::string lambdas = "0.5,1,2,4";
};

// Defaults that depend on the command.
std::string default_p_grid(const std::string& command);
std::string default_u_grid(const std::string& command);
std::string default_phi(const std::string& command, const std::string& mode);
std::string default_psi(const std::string& command, const std::string& mode);

// Fills command-dependent defaults, then checks every field. Throws ValidationError.
void finalize(RunConfig& cfg);
std::vector<std::string> validate(const RunConfig& cfg);

// Parses argv (command first). Values from --config <json> apply first and
// explicit flags override them. Returns false when help was printed.
bool parse_args(int argc, const char* const* argv, RunConfig& cfg, std::string& help);

std::vector<double> parse_grid(const std::string& spec, const std::string& what);
// Gaps 4 - p for the same spec; gaps:<k0>:<k1> yields 2^-k exactly.
std::vector<double> parse_gaps(const std::string& spec, const std::string& what);
UnitIntervalFunction parse_profile(const std::string& tag);

}  // namespace glslab::cli
