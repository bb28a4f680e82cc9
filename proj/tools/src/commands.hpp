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

#include <string>
#include <utility>
#include <vector>

#include "glslab/csv.hpp"
#include "run_config.hpp"

namespace glslab::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kCheckFailed = 2, kNonConvergence = 3 };

struct CommandOutput {
  int exit_code = kOk;
  std::vector<std::pair<std::string, csv::Table>> tables;  // name -> table
  std::string report;
};

CommandOutput cmd_norms(const RunConfig& cfg);
CommandOutput cmd_counterexample(const RunConfig& cfg);
CommandOutput cmd_montecarlo(const RunConfig& cfg);
CommandOutput cmd_embedding(const RunConfig& cfg);

// Dispatches on cfg.command and maps library exceptions to exit codes.
CommandOutput run(const RunConfig& cfg);

// Writes <out>/<name>.csv per table and <out>/report.txt, or everything to
// `stream` when cfg.out is empty.
void emit(const RunConfig& cfg, const CommandOutput& output, std::ostream& stream);

}  // namespace glslab::cli
