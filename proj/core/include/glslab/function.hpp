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
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace glslab {

enum class KernelShape { kUnit, kSqrtLog, kCustom };

enum class Monotonicity { kNone, kIncreasing, kDecreasing };

/// Base shape on the local coordinate s in (0,1). Pieces of a
/// UnitIntervalFunction rescale and translate a kernel onto their support.
class Kernel {
 public:
  using Evaluator = std::function<double(double)>;

  /// k(s) = 1.
  static Kernel unit();
  /// k(s) = sqrt(|log s|); unbounded at s = 0, P(k > u) = exp(-u^2).
  static Kernel sqrt_log();
  /// Arbitrary non-negative shape. Level-set measures are found by root
  /// finding when a monotonicity is declared, by a sampled estimate otherwise.
  /// `log_depth_eval`, if given, returns log k(exp(-t)) for t >= 0 without
  /// forming exp(-t), which lets quadrature follow the singularity past underflow.
  static Kernel custom(std::string name, Evaluator eval, bool singular_at_zero,
                       bool singular_at_one, Monotonicity monotonicity = Monotonicity::kNone,
                       Evaluator log_depth_eval = {});

  double operator()(double s) const { return eval_(s); }
  /// log k(exp(-t)).
  double log_at_depth(double t) const {
    return log_depth_eval_ ? log_depth_eval_(t) : std::log(eval_(std::exp(-t)));
  }

  KernelShape shape() const noexcept { return shape_; }
  const std::string& name() const noexcept { return name_; }
  bool singular_at_zero() const noexcept { return singular_at_zero_; }
  bool singular_at_one() const noexcept { return singular_at_one_; }
  Monotonicity monotonicity() const noexcept { return monotonicity_; }

  /// Lebesgue measure of {s in (0,1) : |amplitude| k(s) > level}.
  double level_measure(double amplitude, double level) const;
  /// Natural logarithm of level_measure, accurate when the measure underflows.
  double log_level_measure(double amplitude, double level) const;

 private:
  Kernel(KernelShape shape, std::string name, Evaluator eval, bool s0, bool s1, Monotonicity mono);

  KernelShape shape_;
  std::string name_;
  Evaluator eval_;
  Evaluator log_depth_eval_;
  bool singular_at_zero_;
  bool singular_at_one_;
  Monotonicity monotonicity_;
};

/// A kernel placed on the half-open support [lo, hi) of (0,1) with amplitude.
/// The support length is carried as `mass` instead of hi - lo so that tiny
/// supports far from the origin keep full relative precision.
struct Piece {
  double lo = 0.0;
  double hi = 1.0;
  double mass = 1.0;
  double amplitude = 1.0;
  bool reversed = false;  // local s = (hi - x) / mass instead of (x - lo) / mass
  Kernel kernel = Kernel::unit();

  bool contains(double x) const noexcept { return x >= lo && x < hi; }
  double local(double x) const noexcept { return reversed ? (hi - x) / mass : (x - lo) / mass; }
  double value(double x) const { return amplitude * kernel(local(x)); }
};

/// Measurable function on the probability space ((0,1), Lebesgue). Internally a
/// sorted list of pairwise disjoint pieces; the function is 0 off their union.
/// Immutable and cheap to copy.
class UnitIntervalFunction {
 public:
  enum class Kind { kProfile, kBlockUnion, kScaled, kAffine };

  static UnitIntervalFunction constant(double value);
  /// f(x) = sqrt(|log x|).
  static UnitIntervalFunction sqrt_log();
  /// height * indicator of (0, mass).
  static UnitIntervalFunction indicator(double mass, double height = 1.0);
  static UnitIntervalFunction from_kernel(Kernel kernel, double amplitude = 1.0);
  static UnitIntervalFunction from_pieces(std::vector<Piece> pieces, Kind kind = Kind::kProfile);
  /// Union of functions with pairwise disjoint supports; throws InvariantError on overlap.
  static UnitIntervalFunction block_union(std::span<const UnitIntervalFunction> blocks);

  UnitIntervalFunction scaled(double factor) const;
  /// x -> amplitude * f((hi - x) / mass) on [lo, hi), 0 elsewhere.
  UnitIntervalFunction mapped_onto(double lo, double hi, double mass, double amplitude = 1.0) const;

  double operator()(double x) const;
  /// Index of the piece containing x, or -1.
  std::ptrdiff_t locate(double x) const;

  Kind kind() const noexcept { return kind_; }
  std::span<const Piece> pieces() const noexcept { return *pieces_; }
  bool empty() const noexcept { return pieces_->empty(); }
  bool singular_at_zero() const;
  bool singular_at_one() const;
  double support_measure() const;

 private:
  UnitIntervalFunction(std::shared_ptr<const std::vector<Piece>> pieces, Kind kind);

  std::shared_ptr<const std::vector<Piece>> pieces_;
  Kind kind_;
};

/// Value of the single block whose support contains x, or 0. Throws
/// InvariantError when the supports overlap.
double evaluate_block_union(std::span<const UnitIntervalFunction> blocks, double x);

}  // namespace glslab
