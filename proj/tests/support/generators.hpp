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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "glslab/function.hpp"

// Seeded generators for property tests.
namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  // Union of 1..max_blocks disjoint blocks, each a constant or sqrt-log
  // profile mapped onto a random sub-interval with a random amplitude.
  glslab::UnitIntervalFunction block_union(int max_blocks = 6) {
    const int k = integer(1, max_blocks);
    std::vector<double> cuts;
    for (int i = 0; i < 2 * k; ++i) cuts.push_back(uniform(0.0, 1.0));
    std::sort(cuts.begin(), cuts.end());
    std::vector<glslab::UnitIntervalFunction> blocks;
    for (int i = 0; i < k; ++i) {
      const double lo = cuts[2 * i];
      const double hi = cuts[2 * i + 1];
      if (!(hi > lo)) continue;
      const auto profile = coin() ? glslab::UnitIntervalFunction::constant(1.0)
                                  : glslab::UnitIntervalFunction::sqrt_log();
      blocks.push_back(profile.mapped_onto(lo, hi, hi - lo, uniform(0.2, 5.0)));
    }
    if (blocks.empty()) return glslab::UnitIntervalFunction::constant(uniform(0.2, 5.0));
    return glslab::UnitIntervalFunction::block_union(blocks);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gen
