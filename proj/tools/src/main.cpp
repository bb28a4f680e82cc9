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

#include <iostream>

#include "commands.hpp"
#include "run_config.hpp"

int main(int argc, char** argv) {
  using namespace glslab::cli;
  RunConfig cfg;
  std::string help;
  try {
    if (!parse_args(argc, argv, cfg, help)) {
      std::cout << help;
      return kOk;
    }
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kValidation;
  }
  const CommandOutput output = run(cfg);
  try {
    emit(cfg, output, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  if (output.exit_code != kOk && output.tables.empty()) std::cerr << output.report;
  return output.exit_code;
}
