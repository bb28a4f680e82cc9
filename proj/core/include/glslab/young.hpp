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

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>

namespace glslab {

enum class YoungFamily { kPower, kExpSquare, kExpLinear, kCustom };

/// Sampled evidence that a candidate Young function is convex and increasing.
struct ConvexityCertificate {
  std::size_t samples = 0;
  double min_second_difference = 0.0;  // normalised by the local scale
  bool convex = false;
  bool increasing = false;
};

/// Even, convex Phi with Phi(0) = 0, strictly increasing on [0, inf).
class YoungFunction {
 public:
  using Evaluator = std::function<double(double)>;

  /// Phi(u) = |u|^p, p >= 1.
  static YoungFunction power(double p);
  /// Phi(u) = exp(u^2 / 2) - 1.
  static YoungFunction exp_square();
  /// Phi(u) = exp(|u|) - 1.
  static YoungFunction exp_linear();
  /// `log_eval` may be empty; log(eval(u)) is used then.
  static YoungFunction custom(std::string name, Evaluator eval, Evaluator log_eval = {});

  /// Parses a tagged record: "power:<p>", "exp-square", "exp-linear".
  static YoungFunction from_record(const std::string& record);

  double operator()(double u) const { return eval_(std::fabs(u)); }
  /// log Phi(|u|), computed without overflow for the built-in families.
  double log_value(double u) const { return log_eval_(std::fabs(u)); }

  YoungFamily family() const noexcept { return family_; }
  double exponent() const noexcept { return exponent_; }
  const std::string& name() const noexcept { return name_; }
  std::string to_record() const;
  const ConvexityCertificate& certificate() const noexcept { return certificate_; }

 private:
  YoungFunction(YoungFamily family, std::string name, double exponent, Evaluator eval,
                Evaluator log_eval);

  YoungFamily family_;
  std::string name_;
  double exponent_ = 0.0;
  Evaluator eval_;
  Evaluator log_eval_;
  ConvexityCertificate certificate_;
};

}  // namespace glslab
