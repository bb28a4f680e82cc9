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

#include <stdexcept>
#include <string>

namespace glslab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an input parameter was violated.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant (disjoint supports, monotone weight, ...) was violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be finite was found to diverge.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not meet its tolerance within the configured budget.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double best_estimate, double achieved_error)
      : Error(what), best_estimate_(best_estimate), achieved_error_(achieved_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double best_estimate_;
  double achieved_error_;
};

}  // namespace glslab
