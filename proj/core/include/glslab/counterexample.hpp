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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glslab/function.hpp"
#include "glslab/norms.hpp"
#include "glslab/psi.hpp"
#include "glslab/quadrature.hpp"
#include "glslab/series.hpp"

namespace glslab {

/// Point of T = {1, 2, ..., inf}.
class TPoint {
 public:
  static constexpr TPoint infinity() { return TPoint(0); }
  static TPoint at(std::uint64_t n);

  bool is_infinity() const noexcept { return index_ == 0; }
  /// Finite index; 0 for the point at infinity.
  std::uint64_t index() const noexcept { return index_; }
  std::string to_string() const;

  friend bool operator==(TPoint, TPoint) = default;

 private:
  constexpr explicit TPoint(std::uint64_t index) : index_(index) {}
  std::uint64_t index_;
};

/// T truncated to {1..N, inf} with d(i,j) = |1/i - 1/j|, d(i,inf) = 1/i.
class MetricSpaceT {
 public:
  explicit MetricSpaceT(std::uint64_t truncation);

  double distance(TPoint s, TPoint t) const;
  bool contains(TPoint t) const noexcept;
  std::vector<TPoint> points() const;
  std::uint64_t truncation() const noexcept { return truncation_; }

 private:
  std::uint64_t truncation_;
};

/// Parameters and derived sequences of the disjoint-block process:
/// c_n = n^beta, Delta_n = C(beta) n^(-4 beta - 1), a_n = sum_{m >= n} Delta_m,
/// for n = 1..nmax (a_n also at nmax + 1).
class ProcessSpec {
 public:
  static constexpr std::uint64_t kDefaultNmax = 100000;

  /// Throws ParameterError for beta <= 0 or nmax < 10, DivergenceError when the
  /// profile is not in L_4.
  static ProcessSpec build(double beta, UnitIntervalFunction profile,
                           std::uint64_t nmax = kDefaultNmax, QuadratureConfig cfg = {});

  double beta() const noexcept { return beta_; }
  const UnitIntervalFunction& profile() const noexcept { return profile_; }
  std::uint64_t nmax() const noexcept { return nmax_; }
  const QuadratureConfig& quadrature() const noexcept { return cfg_; }

  /// C(beta) and its certified enclosure.
  double normalization() const noexcept { return normalization_; }
  double normalization_lower() const noexcept { return normalization_lower_; }
  double normalization_upper() const noexcept { return normalization_upper_; }
  /// Enclosure of sum_{n>=1} n^(-4 beta - 1).
  const SeriesBracket& mass_series() const noexcept { return mass_series_; }

  double c(std::uint64_t n) const;
  double delta(std::uint64_t n) const;
  double a(std::uint64_t n) const;
  double log_n(std::uint64_t n) const { return log_n_.at(n); }
  std::span<const double> log_table() const noexcept { return log_n_; }

  /// nu(p) = |f|_p for the profile, with its quadrature error.
  NormReport nu(double p) const;

 private:
  ProcessSpec() = default;

  double beta_ = 1.0;
  UnitIntervalFunction profile_ = UnitIntervalFunction::constant(1.0);
  std::uint64_t nmax_ = 0;
  QuadratureConfig cfg_;
  double normalization_ = 0.0;
  double normalization_lower_ = 0.0;
  double normalization_upper_ = 0.0;
  SeriesBracket mass_series_;
  std::vector<double> c_;
  std::vector<double> delta_;
  std::vector<double> a_;
  std::vector<double> log_n_;
};

/// g_n(x) = c_n f((a_n - x) / Delta_n) on [a_{n+1}, a_n), 0 elsewhere.
UnitIntervalFunction block(const ProcessSpec& spec, std::uint64_t n);
/// g = sum_{n <= nmax} g_n, which is also sup_n g_n.
UnitIntervalFunction envelope(const ProcessSpec& spec);

/// |g_n|_p = [C(beta) n^(p beta - 4 beta - 1)]^(1/p) nu(p), 1 <= p <= 4.
double block_lp_closed_form(const ProcessSpec& spec, std::uint64_t n, double p);

/// |sup_n |g_n||_p^p = C(beta) nu^p(p) sum_n n^(p beta - 4 beta - 1) over the
/// infinite process, enclosed by the integral test. Divergent for p >= 4.
SeriesBracket sup_lp_series(const ProcessSpec& spec, double p);
/// The same series at p = 4 - gap, with the exponent taken from the gap directly.
SeriesBracket sup_lp_series_at_gap(const ProcessSpec& spec, double gap);

/// theta(t) = g_t with optional Rademacher signs; theta(inf) = 0.
class CounterexampleProcess {
 public:
  explicit CounterexampleProcess(ProcessSpec spec);

  const ProcessSpec& spec() const noexcept { return *spec_; }
  bool is_symmetrized() const noexcept { return !signs_.empty(); }
  /// Sign of block n (always +1 for the unsymmetrized process).
  int sign(std::uint64_t n) const;
  const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }

  /// n with x in [a_{n+1}, a_n), or 0 when no block of the truncation covers x.
  std::uint64_t locate(double x) const;
  double theta(TPoint t, double x) const;
  /// eps(n) g_n.
  UnitIntervalFunction block(std::uint64_t n) const;
  /// sum_n eps(n) g_n; equal to the envelope up to sign per block.
  UnitIntervalFunction signed_sum() const;
  /// sup_n |theta(n)| = sum_n g_n.
  const UnitIntervalFunction& envelope() const;

 private:
  friend CounterexampleProcess symmetrize(const CounterexampleProcess&, std::uint64_t);

  std::shared_ptr<const ProcessSpec> spec_;
  std::vector<std::int8_t> signs_;  // index n - 1
  std::optional<std::uint64_t> seed_;
  mutable std::shared_ptr<const UnitIntervalFunction> envelope_;
};

/// Independent fair signs eps(n), n = 1..nmax, from `seed`.
CounterexampleProcess symmetrize(const CounterexampleProcess& process, std::uint64_t seed);

/// ||theta(t) - theta(s)||_{G psi}.
NormReport gls_distance(const CounterexampleProcess& process, const PsiFunction& psi, TPoint t,
                        TPoint s, const GlsOptions& opts = {});
/// ||theta(n) - theta(inf)||_{G psi} = ||g_n||_{G psi}.
NormReport gls_continuity_modulus(const ProcessSpec& spec, const PsiFunction& psi,
                                  std::uint64_t n, const GlsOptions& opts = {});

struct CertificateRow {
  double p;
  double gap;
  double sup_norm;  // |sup_n |g_n||_p
  double phi;
  double ratio;
};

struct DivergenceCertificate {
  bool certified = false;
  std::string reason;
  std::vector<CertificateRow> rows;
};

/// Gaps 2^-k for k_first <= k <= k_last.
std::vector<double> dyadic_gaps(int k_first, int k_last);

/// Certifies ||sup_n |g_n|||_{G phi} = inf: the ratio |sup g|_p / phi(p) along
/// p = 4 - gap must increase over the last `window` points and pass `threshold`.
DivergenceCertificate weaker_norm_divergence(const ProcessSpec& spec, const PsiFunction& phi,
                                             const std::vector<double>& gaps = dyadic_gaps(6, 256),
                                             const DivergenceCriterion& criterion = {});

}  // namespace glslab
