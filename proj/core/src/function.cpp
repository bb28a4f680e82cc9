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

#include "glslab/function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glslab/errors.hpp"

namespace glslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSampledCells = 1 << 16;
constexpr double kMinLogS = -700.0;

// Largest log s in [kMinLogS, 0] with pred(exp(log s)) true, for pred that
// is true on an initial segment of (0,1).
template <typename Pred>
double log_boundary(Pred pred) {
  if (pred(1.0)) return 0.0;
  double lo = kMinLogS;
  if (!pred(std::exp(lo))) return -kInf;
  double hi = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (pred(std::exp(mid)) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

Kernel::Kernel(KernelShape shape, std::string name, Evaluator eval, bool s0, bool s1,
               Monotonicity mono)
    : shape_(shape),
      name_(std::move(name)),
      eval_(std::move(eval)),
      singular_at_zero_(s0),
      singular_at_one_(s1),
      monotonicity_(mono) {}

Kernel Kernel::unit() {
  return Kernel(KernelShape::kUnit, "unit", [](double) { return 1.0; }, false, false,
                Monotonicity::kNone);
}

Kernel Kernel::sqrt_log() {
  Kernel k(
      KernelShape::kSqrtLog, "sqrt-log",
      [](double s) { return std::sqrt(std::fabs(std::log(s))); }, true, false,
      Monotonicity::kDecreasing);
  k.log_depth_eval_ = [](double t) { return 0.5 * std::log(t); };
  return k;
}

Kernel Kernel::custom(std::string name, Evaluator eval, bool singular_at_zero,
                      bool singular_at_one, Monotonicity monotonicity, Evaluator log_depth_eval) {
  if (!eval) throw ParameterError("custom kernel needs an evaluator");
  Kernel k(KernelShape::kCustom, std::move(name), std::move(eval), singular_at_zero,
           singular_at_one, monotonicity);
  k.log_depth_eval_ = std::move(log_depth_eval);
  return k;
}

double Kernel::log_level_measure(double amplitude, double level) const {
  const double a = std::fabs(amplitude);
  if (level < 0.0) return 0.0;
  if (a == 0.0) return -kInf;
  switch (shape_) {
    case KernelShape::kUnit:
      return a > level ? 0.0 : -kInf;
    case KernelShape::kSqrtLog: {
      const double u = level / a;
      return -u * u;
    }
    case KernelShape::kCustom:
      break;
  }
  const double threshold = level / a;
  switch (monotonicity_) {
    case Monotonicity::kDecreasing:
      return log_boundary([&](double s) { return eval_(s) > threshold; });
    case Monotonicity::kIncreasing: {
      // {k > threshold} = (s*, 1); measure 1 - s*.
      const double log_below =
          log_boundary([&](double s) { return !(eval_(s) > threshold); });
      if (log_below == -kInf) return 0.0;
      return std::log1p(-std::exp(log_below));
    }
    case Monotonicity::kNone:
      break;
  }
  int hits = 0;
  for (int i = 0; i < kSampledCells; ++i) {
    const double s = (i + 0.5) / kSampledCells;
    if (eval_(s) > threshold) ++hits;
  }
  return hits == 0 ? -kInf : std::log(static_cast<double>(hits) / kSampledCells);
}

double Kernel::level_measure(double amplitude, double level) const {
  return std::exp(log_level_measure(amplitude, level));
}

UnitIntervalFunction::UnitIntervalFunction(std::shared_ptr<const std::vector<Piece>> pieces,
                                           Kind kind)
    : pieces_(std::move(pieces)), kind_(kind) {}

UnitIntervalFunction UnitIntervalFunction::from_pieces(std::vector<Piece> pieces, Kind kind) {
  for (const auto& p : pieces) {
    if (!(p.lo >= 0.0 && p.hi <= 1.0 && p.lo < p.hi) || !(p.mass > 0.0)) {
      throw ParameterError("piece support must be a non-empty subinterval of [0,1)");
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i - 1].hi > pieces[i].lo) {
      throw InvariantError("supports overlap: [" + std::to_string(pieces[i - 1].lo) + ", " +
                           std::to_string(pieces[i - 1].hi) + ") and [" +
                           std::to_string(pieces[i].lo) + ", " + std::to_string(pieces[i].hi) +
                           ")");
    }
  }
  return UnitIntervalFunction(std::make_shared<const std::vector<Piece>>(std::move(pieces)),
                              kind);
}

UnitIntervalFunction UnitIntervalFunction::constant(double value) {
  return from_kernel(Kernel::unit(), value);
}

UnitIntervalFunction UnitIntervalFunction::sqrt_log() { return from_kernel(Kernel::sqrt_log()); }

UnitIntervalFunction UnitIntervalFunction::indicator(double mass, double height) {
  if (!(mass > 0.0 && mass <= 1.0)) throw ParameterError("indicator mass must lie in (0,1]");
  Piece piece;
  piece.lo = 0.0;
  piece.hi = mass;
  piece.mass = mass;
  piece.amplitude = height;
  return from_pieces({piece});
}

UnitIntervalFunction UnitIntervalFunction::from_kernel(Kernel kernel, double amplitude) {
  Piece piece;
  piece.amplitude = amplitude;
  piece.kernel = std::move(kernel);
  return from_pieces({piece});
}

UnitIntervalFunction UnitIntervalFunction::block_union(
    std::span<const UnitIntervalFunction> blocks) {
  std::vector<Piece> all;
  for (const auto& block : blocks) {
    all.insert(all.end(), block.pieces().begin(), block.pieces().end());
  }
  return from_pieces(std::move(all), Kind::kBlockUnion);
}

UnitIntervalFunction UnitIntervalFunction::scaled(double factor) const {
  std::vector<Piece> out(pieces_->begin(), pieces_->end());
  for (auto& p : out) p.amplitude *= factor;
  return UnitIntervalFunction(std::make_shared<const std::vector<Piece>>(std::move(out)),
                              Kind::kScaled);
}

UnitIntervalFunction UnitIntervalFunction::mapped_onto(double lo, double hi, double mass,
                                                       double amplitude) const {
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi && mass > 0.0)) {
    throw ParameterError("affine target must be a non-empty subinterval of [0,1)");
  }
  std::vector<Piece> out;
  out.reserve(pieces_->size());
  for (const auto& inner : *pieces_) {
    Piece p = inner;
    // s' = (hi - x) / mass runs over the inner support [inner.lo, inner.hi).
    p.lo = inner.hi == 1.0 ? lo : hi - mass * inner.hi;
    p.hi = inner.lo == 0.0 ? hi : hi - mass * inner.lo;
    p.mass = mass * inner.mass;
    p.amplitude = amplitude * inner.amplitude;
    p.reversed = !inner.reversed;
    out.push_back(std::move(p));
  }
  return UnitIntervalFunction(std::make_shared<const std::vector<Piece>>(std::move(out)),
                              Kind::kAffine);
}

std::ptrdiff_t UnitIntervalFunction::locate(double x) const {
  const auto& ps = *pieces_;
  auto it = std::upper_bound(ps.begin(), ps.end(), x,
                             [](double v, const Piece& p) { return v < p.lo; });
  if (it == ps.begin()) return -1;
  --it;
  return it->contains(x) ? std::distance(ps.begin(), it) : -1;
}

double UnitIntervalFunction::operator()(double x) const {
  const auto idx = locate(x);
  return idx < 0 ? 0.0 : (*pieces_)[static_cast<std::size_t>(idx)].value(x);
}

bool UnitIntervalFunction::singular_at_zero() const {
  return std::any_of(pieces_->begin(), pieces_->end(), [](const Piece& p) {
    return p.lo == 0.0 &&
           (p.reversed ? p.kernel.singular_at_one() : p.kernel.singular_at_zero());
  });
}

bool UnitIntervalFunction::singular_at_one() const {
  return std::any_of(pieces_->begin(), pieces_->end(), [](const Piece& p) {
    return p.hi == 1.0 &&
           (p.reversed ? p.kernel.singular_at_zero() : p.kernel.singular_at_one());
  });
}

double UnitIntervalFunction::support_measure() const {
  double total = 0.0;
  for (const auto& p : *pieces_) total += p.mass;
  return total;
}

double evaluate_block_union(std::span<const UnitIntervalFunction> blocks, double x) {
  return UnitIntervalFunction::block_union(blocks)(x);
}

}  // namespace glslab
