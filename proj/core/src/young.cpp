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

#include "glslab/young.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "glslab/errors.hpp"
#include "record_util.hpp"

namespace glslab {

namespace {

constexpr std::size_t kCertificateSamples = 400;

ConvexityCertificate certify(const YoungFunction::Evaluator& eval, double u_max) {
  ConvexityCertificate cert;
  cert.samples = kCertificateSamples;
  cert.convex = true;
  cert.increasing = true;
  cert.min_second_difference = std::numeric_limits<double>::infinity();
  const double h = u_max / static_cast<double>(kCertificateSamples);
  double prev = eval(0.0);
  for (std::size_t i = 1; i < kCertificateSamples; ++i) {
    const double u = h * static_cast<double>(i);
    const double lo = eval(u - h);
    const double mid = eval(u);
    const double hi = eval(u + h);
    const double scale = std::fabs(lo) + std::fabs(mid) + std::fabs(hi) +
                         std::numeric_limits<double>::min();
    const double second = (hi - 2.0 * mid + lo) / scale;
    cert.min_second_difference = std::min(cert.min_second_difference, second);
    if (second < -1e-10) cert.convex = false;
    if (!(mid > prev)) cert.increasing = false;
    prev = mid;
  }
  return cert;
}

}  // namespace

YoungFunction::YoungFunction(YoungFamily family, std::string name, double exponent,
                             Evaluator eval, Evaluator log_eval)
    : family_(family),
      name_(std::move(name)),
      exponent_(exponent),
      eval_(std::move(eval)),
      log_eval_(std::move(log_eval)) {
  if (!log_eval_) {
    log_eval_ = [ev = eval_](double u) { return std::log(ev(u)); };
  }
  if (eval_(0.0) != 0.0) throw ParameterError("Young function must vanish at 0: " + name_);
  const double u_max = family_ == YoungFamily::kExpSquare ? 6.0 : 10.0;
  certificate_ = certify(eval_, u_max);
  if (!certificate_.convex) throw ParameterError("Young function is not convex: " + name_);
  if (!certificate_.increasing) {
    throw ParameterError("Young function is not strictly increasing: " + name_);
  }
}

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0)) throw ParameterError("power Young function needs p >= 1");
  return YoungFunction(
      YoungFamily::kPower, "power", p, [p](double u) { return std::pow(u, p); },
      [p](double u) { return p * std::log(u); });
}

YoungFunction YoungFunction::exp_square() {
  return YoungFunction(
      YoungFamily::kExpSquare, "exp-square", 2.0,
      [](double u) { return std::expm1(0.5 * u * u); },
      [](double u) {
        const double half = 0.5 * u * u;
        return half + std::log(-std::expm1(-half));
      });
}

YoungFunction YoungFunction::exp_linear() {
  return YoungFunction(
      YoungFamily::kExpLinear, "exp-linear", 1.0, [](double u) { return std::expm1(u); },
      [](double u) { return u + std::log(-std::expm1(-u)); });
}

YoungFunction YoungFunction::custom(std::string name, Evaluator eval, Evaluator log_eval) {
  if (!eval) throw ParameterError("custom Young function needs an evaluator");
  return YoungFunction(YoungFamily::kCustom, std::move(name), 0.0, std::move(eval),
                       std::move(log_eval));
}

YoungFunction YoungFunction::from_record(const std::string& record) {
  const auto parts = detail::split(record, ':');
  if (parts.empty()) throw ParameterError("empty Young function record");
  const std::string& tag = parts[0];
  if (tag == "power" && parts.size() == 2) return power(detail::parse_double(parts[1], record));
  if (tag == "exp-square" && parts.size() == 1) return exp_square();
  if (tag == "exp-linear" && parts.size() == 1) return exp_linear();
  throw ParameterError("unknown Young function record '" + record + "'");
}

std::string YoungFunction::to_record() const {
  switch (family_) {
    case YoungFamily::kPower:
      return "power:" + detail::shortest(exponent_);
    case YoungFamily::kExpSquare:
      return "exp-square";
    case YoungFamily::kExpLinear:
      return "exp-linear";
    case YoungFamily::kCustom:
      break;
  }
  return "custom:" + name_;
}

}  // namespace glslab
