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

#include "glslab/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "glslab/errors.hpp"
#include "glslab/random.hpp"
#include "record_util.hpp"

namespace glslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_index(const ProcessSpec& spec, std::uint64_t n) {
  if (n < 1 || n > spec.nmax()) {
    throw ParameterError("block index " + std::to_string(n) + " outside 1.." +
                         std::to_string(spec.nmax()));
  }
}

}  // namespace

TPoint TPoint::at(std::uint64_t n) {
  if (n == 0) throw ParameterError("points of T are indexed from 1");
  return TPoint(n);
}

std::string TPoint::to_string() const {
  return is_infinity() ? std::string("inf") : std::to_string(index_);
}

MetricSpaceT::MetricSpaceT(std::uint64_t truncation) : truncation_(truncation) {
  if (truncation == 0) throw ParameterError("metric space truncation must be positive");
}

bool MetricSpaceT::contains(TPoint t) const noexcept {
  return t.is_infinity() || t.index() <= truncation_;
}

double MetricSpaceT::distance(TPoint s, TPoint t) const {
  if (!contains(s) || !contains(t)) throw ParameterError("point outside the truncated space");
  const double inv_s = s.is_infinity() ? 0.0 : 1.0 / static_cast<double>(s.index());
  const double inv_t = t.is_infinity() ? 0.0 : 1.0 / static_cast<double>(t.index());
  return std::fabs(inv_s - inv_t);
}

std::vector<TPoint> MetricSpaceT::points() const {
  std::vector<TPoint> out;
  out.reserve(truncation_ + 1);
  for (std::uint64_t n = 1; n <= truncation_; ++n) out.push_back(TPoint::at(n));
  out.push_back(TPoint::infinity());
  return out;
}

ProcessSpec ProcessSpec::build(double beta, UnitIntervalFunction profile, std::uint64_t nmax,
                               QuadratureConfig cfg) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ParameterError("beta must be positive (the block masses do not sum otherwise)");
  }
  if (nmax < 10) throw ParameterError("nmax must be at least 10");
  cfg.validate();
  const NormReport l4 = lp_norm(profile, 4.0, cfg);
  if (l4.divergent) throw DivergenceError("profile is not in L_4");
  if (!(l4.value > 0.0)) throw ParameterError("profile must be non-zero");

  ProcessSpec spec;
  spec.beta_ = beta;
  spec.profile_ = std::move(profile);
  spec.nmax_ = nmax;
  spec.cfg_ = cfg;

  spec.log_n_.resize(nmax + 2);
  for (std::uint64_t n = 1; n <= nmax + 1; ++n) {
    spec.log_n_[n] = std::log(static_cast<double>(n));
  }

  const double s = 4.0 * beta;
  const double sigma = 1.0 + s;
  const double tail_lo = power_tail_integral(static_cast<double>(nmax) + 1.0, s);
  const double tail_hi = power_tail_integral(static_cast<double>(nmax), s);
  const double tail_mid = 0.5 * (tail_lo + tail_hi);

  // Suffix sums S(n) = sum_{m >= n} m^-sigma, accumulated from the smallest terms.
  std::vector<double> suffix(nmax + 2);
  CompensatedSum running;
  running.add(tail_mid);
  suffix[nmax + 1] = running.value();
  for (std::uint64_t n = nmax; n >= 1; --n) {
    const double term = std::exp(-sigma * spec.log_n_[n]);
    running.add(term);
    suffix[n] = running.value();
  }
  spec.mass_series_ = zeta_bracket(s, nmax, spec.log_n_);
  spec.mass_series_.value = suffix[1];

  spec.normalization_ = 1.0 / suffix[1];
  spec.normalization_lower_ = 1.0 / spec.mass_series_.upper;
  spec.normalization_upper_ = 1.0 / spec.mass_series_.lower;

  spec.c_.assign(nmax + 1, 0.0);
  spec.delta_.assign(nmax + 1, 0.0);
  spec.a_.assign(nmax + 2, 0.0);
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    spec.c_[n] = std::pow(static_cast<double>(n), beta);
    spec.delta_[n] = spec.normalization_ * std::exp(-sigma * spec.log_n_[n]);
  }
  for (std::uint64_t n = 1; n <= nmax + 1; ++n) spec.a_[n] = spec.normalization_ * suffix[n];
  spec.a_[1] = 1.0;
  return spec;
}

double ProcessSpec::c(std::uint64_t n) const {
  require_index(*this, n);
  return c_[n];
}

double ProcessSpec::delta(std::uint64_t n) const {
  require_index(*this, n);
  return delta_[n];
}

double ProcessSpec::a(std::uint64_t n) const {
  if (n < 1 || n > nmax_ + 1) throw ParameterError("a(n) defined for 1 <= n <= nmax + 1");
  return a_[n];
}

NormReport ProcessSpec::nu(double p) const { return lp_norm(profile_, p, cfg_); }

UnitIntervalFunction block(const ProcessSpec& spec, std::uint64_t n) {
  require_index(spec, n);
  return spec.profile().mapped_onto(spec.a(n + 1), spec.a(n), spec.delta(n), spec.c(n));
}

UnitIntervalFunction envelope(const ProcessSpec& spec) {
  std::vector<Piece> pieces;
  pieces.reserve(spec.nmax() * spec.profile().pieces().size());
  for (std::uint64_t n = 1; n <= spec.nmax(); ++n) {
    const auto g = block(spec, n);
    pieces.insert(pieces.end(), g.pieces().begin(), g.pieces().end());
  }
  return UnitIntervalFunction::from_pieces(std::move(pieces),
                                           UnitIntervalFunction::Kind::kBlockUnion);
}

double block_lp_closed_form(const ProcessSpec& spec, std::uint64_t n, double p) {
  require_index(spec, n);
  if (!(p >= 1.0 && p <= 4.0)) throw ParameterError("closed form holds for 1 <= p <= 4");
  const double beta = spec.beta();
  const double exponent = p * beta - 4.0 * beta - 1.0;
  const double pth = spec.normalization() * std::exp(exponent * spec.log_n(n));
  return std::pow(pth, 1.0 / p) * spec.nu(p).value;
}

SeriesBracket sup_lp_series_at_gap(const ProcessSpec& spec, double gap) {
  if (!(gap <= 3.0)) throw ParameterError("sup_lp_series needs p >= 1");
  if (!(gap > 0.0)) {
    SeriesBracket out;
    out.divergent = true;
    out.value = out.lower = out.upper = kInf;
    return out;
  }
  const double p = 4.0 - gap;
  const SeriesBracket zeta = zeta_bracket(spec.beta() * gap, spec.nmax(), spec.log_table());
  const NormReport nu = spec.nu(p);
  const double nu_p = std::pow(nu.value, p);
  const double nu_p_lo = std::pow(std::max(0.0, nu.value - nu.error), p);
  const double nu_p_hi = std::pow(nu.value + nu.error, p);

  SeriesBracket out;
  out.terms = zeta.terms;
  out.value = spec.normalization() * nu_p * zeta.value;
  out.lower = spec.normalization_lower() * nu_p_lo * zeta.lower;
  out.upper = spec.normalization_upper() * nu_p_hi * zeta.upper;
  return out;
}

SeriesBracket sup_lp_series(const ProcessSpec& spec, double p) {
  if (!(p >= 1.0)) throw ParameterError("sup_lp_series needs p >= 1");
  return sup_lp_series_at_gap(spec, 4.0 - p);
}

CounterexampleProcess::CounterexampleProcess(ProcessSpec spec)
    : spec_(std::make_shared<const ProcessSpec>(std::move(spec))) {}

int CounterexampleProcess::sign(std::uint64_t n) const {
  require_index(*spec_, n);
  return signs_.empty() ? 1 : signs_[n - 1];
}

std::uint64_t CounterexampleProcess::locate(double x) const {
  const ProcessSpec& s = *spec_;
  if (!(x < 1.0) || !(x >= s.a(s.nmax() + 1))) return 0;
  // a(n) decreases in n; find the largest n with a(n) > x.
  std::uint64_t lo = 1;
  std::uint64_t hi = s.nmax();
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (s.a(mid) > x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

double CounterexampleProcess::theta(TPoint t, double x) const {
  if (t.is_infinity()) return 0.0;
  const ProcessSpec& s = *spec_;
  const std::uint64_t n = t.index();
  require_index(s, n);
  if (!(x >= s.a(n + 1) && x < s.a(n))) return 0.0;
  const double local = (s.a(n) - x) / s.delta(n);
  return sign(n) * s.c(n) * s.profile()(local);
}

UnitIntervalFunction CounterexampleProcess::block(std::uint64_t n) const {
  const auto g = glslab::block(*spec_, n);
  const int eps = sign(n);
  return eps == 1 ? g : g.scaled(static_cast<double>(eps));
}

UnitIntervalFunction CounterexampleProcess::signed_sum() const {
  if (signs_.empty()) return envelope();
  std::vector<Piece> pieces;
  for (std::uint64_t n = 1; n <= spec_->nmax(); ++n) {
    const auto g = block(n);
    pieces.insert(pieces.end(), g.pieces().begin(), g.pieces().end());
  }
  return UnitIntervalFunction::from_pieces(std::move(pieces),
                                           UnitIntervalFunction::Kind::kBlockUnion);
}

const UnitIntervalFunction& CounterexampleProcess::envelope() const {
  if (!envelope_) envelope_ = std::make_shared<const UnitIntervalFunction>(glslab::envelope(*spec_));
  return *envelope_;
}

CounterexampleProcess symmetrize(const CounterexampleProcess& process, std::uint64_t seed) {
  CounterexampleProcess out = process;
  out.envelope_ = process.envelope_;
  RandomStream stream(seed);
  out.signs_.resize(process.spec().nmax());
  for (auto& s : out.signs_) s = static_cast<std::int8_t>(stream.rademacher());
  out.seed_ = seed;
  return out;
}

NormReport gls_distance(const CounterexampleProcess& process, const PsiFunction& psi, TPoint t,
                        TPoint s, const GlsOptions& opts) {
  if (t == s) {
    NormReport zero;
    zero.method = NormMethod::kGrandLebesgue;
    return zero;
  }
  // Disjoint supports: |theta(t) - theta(s)| = |g_t| + |g_s| pointwise.
  std::vector<UnitIntervalFunction> parts;
  for (TPoint point : {t, s}) {
    if (!point.is_infinity()) parts.push_back(process.block(point.index()));
  }
  const auto difference = UnitIntervalFunction::block_union(parts);
  return gls_norm(difference, psi, opts, process.spec().quadrature());
}

NormReport gls_continuity_modulus(const ProcessSpec& spec, const PsiFunction& psi,
                                  std::uint64_t n, const GlsOptions& opts) {
  require_index(spec, n);
  const auto g = block(spec, n);
  return gls_norm(g, psi, opts, spec.quadrature());
}

std::vector<double> dyadic_gaps(int k_first, int k_last) {
  if (k_first > k_last || k_first < 0) throw ParameterError("dyadic gaps need 0 <= k_first <= k_last");
  std::vector<double> gaps;
  for (int k = k_first; k <= k_last; ++k) gaps.push_back(std::ldexp(1.0, -k));
  return gaps;
}

DivergenceCertificate weaker_norm_divergence(const ProcessSpec& spec, const PsiFunction& phi,
                                             const std::vector<double>& gaps,
                                             const DivergenceCriterion& criterion) {
  if (!(phi.upper() == 4.0)) throw ParameterError("phi must be supported up to p = 4");
  DivergenceCertificate cert;
  std::vector<Witness> ratios;
  for (double gap : gaps) {
    if (!(gap > 0.0 && gap <= 3.0)) throw ParameterError("p-grid must lie in [1, 4)");
    const double p = 4.0 - gap;
    const SeriesBracket series = sup_lp_series_at_gap(spec, gap);
    const double sup_norm = std::pow(series.value, 1.0 / p);
    const double phi_v = phi.at_gap(gap);
    const double ratio = std::isinf(phi_v) ? 0.0 : sup_norm / phi_v;
    cert.rows.push_back({p, gap, sup_norm, phi_v, ratio});
    ratios.push_back({p, ratio});
  }
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    if (!(gaps[i] < gaps[i - 1])) throw ParameterError("p-grid must accumulate at 4");
  }
  cert.certified = certifies_divergence(ratios, criterion);
  cert.reason = cert.certified
                    ? "ratio increases over the last " + std::to_string(criterion.monotone_window) +
                          " points and exceeds " + detail::shortest(criterion.threshold)
                    : "growth beyond the threshold not observed on this grid";
  return cert;
}

}  // namespace glslab
