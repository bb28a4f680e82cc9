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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "glslab/counterexample.hpp"
#include "glslab/errors.hpp"
#include "glslab/montecarlo.hpp"
#include "glslab/norms.hpp"
#include "glslab/psi.hpp"
#include "glslab/random.hpp"
#include "glslab/young.hpp"

namespace glslab::cli {

namespace {

using csv::format_number;

std::string num(double v) { return format_number(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }
std::string flag(bool b) { return b ? "1" : "0"; }
std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

QuadratureConfig quadrature(const RunConfig& cfg) {
  QuadratureConfig q;
  q.rel_tol = cfg.tol;
  return q;
}

ProcessSpec build_spec(const RunConfig& cfg) {
  return ProcessSpec::build(cfg.beta, parse_profile(cfg.profile), cfg.nmax, quadrature(cfg));
}

// 1, 2, 5, 10, 20, 50, ... up to nmax.
std::vector<std::uint64_t> log_indices(std::uint64_t nmax) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t scale = 1; scale <= nmax; scale *= 10) {
    for (std::uint64_t m : {1, 2, 5}) {
      if (m * scale <= nmax) out.push_back(m * scale);
    }
  }
  return out;
}

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

std::string render_checks(const std::vector<Check>& checks, int& exit_code) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    if (!c.passed) exit_code = kCheckFailed;
  }
  return out.str();
}

void add_norm_row(csv::Table& t, const std::string& norm, const std::string& function,
                  const std::string& parameter, const NormReport& r) {
  t.add_row({norm, function, parameter, num(r.value), num(r.error), flag(r.divergent),
             opt(r.argmax)});
}

}  // namespace

CommandOutput cmd_norms(const RunConfig& cfg) {
  CommandOutput out;
  const auto f = parse_profile(cfg.profile);
  const auto q = quadrature(cfg);
  csv::Table t({"norm", "function", "parameter", "value", "error", "divergent", "argmax"});
  for (double p : parse_grid(cfg.p_grid, "p-grid")) {
    add_norm_row(t, "lp", "", num(p), lp_norm(f, p, q));
  }
  for (double r : parse_grid(cfg.p_grid, "p-grid")) {
    const auto psi = PsiFunction::degenerate(r);
    add_norm_row(t, "gls", psi.to_record(), num(r), gls_norm(f, psi, {}, q));
  }
  const auto psi = PsiFunction::from_record(cfg.psi);
  add_norm_row(t, "gls", psi.to_record(), "", gls_norm(f, psi, {}, q));
  for (const auto& Phi : {YoungFunction::exp_square(), YoungFunction::exp_linear(),
                          YoungFunction::power(2.0)}) {
    add_norm_row(t, "luxemburg", Phi.to_record(), "", luxemburg_norm(f, Phi, q));
  }
  for (double alpha : {0.5, 1.0}) {
    add_norm_row(t, "lorentz", "power:" + num(alpha), num(alpha),
                 lorentz_norm(f, LorentzWeight::power(alpha), LorentzGrid::standard(), q));
  }
  out.report = "norms of " + cfg.profile + ": " + std::to_string(t.size()) + " rows\n";
  out.tables.emplace_back("norms", std::move(t));
  return out;
}

CommandOutput cmd_counterexample(const RunConfig& cfg) {
  CommandOutput out;
  const ProcessSpec spec = build_spec(cfg);
  std::vector<Check> checks;

  // Block norms, closed form against quadrature, and the uniform L_4 bound.
  csv::Table blocks({"n", "p", "closed_form", "quadrature", "rel_diff", "pth_power"});
  const double nu4 = spec.nu(4.0).value;
  const double uniform = spec.normalization() * std::pow(nu4, 4.0);
  double worst_rel = 0.0;
  double worst_pth = 0.0;
  for (std::uint64_t n : log_indices(std::min<std::uint64_t>(spec.nmax(), 50))) {
    const auto g = block(spec, n);
    for (double p : {1.0, 2.0, 3.0, 3.9, 4.0}) {
      const double cf = block_lp_closed_form(spec, n, p);
      const double qv = lp_norm(g, p, spec.quadrature()).value;
      const double rel = std::fabs(qv - cf) / cf;
      const double pth = std::pow(qv, p);
      worst_rel = std::max(worst_rel, rel);
      worst_pth = std::max(worst_pth, pth);
      blocks.add_row({num(n), num(p), num(cf), num(qv), num(rel), num(pth)});
    }
  }
  checks.push_back({"closed-form block norms", worst_rel <= 1e-6,
                    "max relative difference " + num(worst_rel)});
  checks.push_back({"uniform L4 bound", worst_pth <= uniform * (1.0 + 1e-9),
                    "max |g_n|_p^p " + num(worst_pth) + " vs C nu^4(4) " + num(uniform)});

  // Blow-up of |sup g_n|_p as p -> 4.
  csv::Table asym({"p", "gap", "series", "series_lower", "series_upper", "sup_norm",
                   "gap_times_series", "scaled_sup_norm"});
  std::vector<double> scaled;
  for (double gap : parse_gaps(cfg.p_grid, "p-grid")) {
    const double p = 4.0 - gap;
    const auto s = sup_lp_series_at_gap(spec, gap);
    const double sup_norm = std::pow(s.value, 1.0 / p);
    scaled.push_back(std::pow(gap, 0.25) * sup_norm);
    asym.add_row({num(p), num(gap), num(s.value), num(s.lower), num(s.upper), num(sup_norm),
                  num(gap * s.value), num(scaled.back())});
  }
  if (scaled.size() >= 3) {
    const auto tail = std::vector<double>(scaled.end() - 3, scaled.end());
    const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
    const double spread = (*hi - *lo) / *hi;
    checks.push_back({"asymptotic stabilization", spread <= 0.02,
                      "spread over the last three rows " + num(spread)});
  }

  // Divergence of the weaker norm.
  const auto phi = PsiFunction::from_record(cfg.phi);
  const auto cert = weaker_norm_divergence(spec, phi, dyadic_gaps(6, cfg.cert_k_last));
  csv::Table div({"p", "gap", "sup_norm", "phi", "ratio"});
  for (const auto& row : cert.rows) {
    div.add_row({num(row.p), num(row.gap), num(row.sup_norm), num(row.phi), num(row.ratio)});
  }
  checks.push_back({"weaker-norm divergence certificate", cert.certified, cert.reason});

  // Continuity of theta at infinity in the degenerate grand space.
  csv::Table cont({"n", "modulus", "closed_form", "rel_diff"});
  const auto psi4 = PsiFunction::degenerate(4.0);
  double worst_mod = 0.0;
  bool decreasing = true;
  double previous = std::numeric_limits<double>::infinity();
  for (std::uint64_t n : log_indices(spec.nmax())) {
    const auto m = gls_continuity_modulus(spec, psi4, n);
    const double cf = std::pow(spec.normalization() / static_cast<double>(n), 0.25) * nu4;
    const double rel = std::fabs(m.value - cf) / cf;
    worst_mod = std::max(worst_mod, rel);
    decreasing = decreasing && m.value < previous;
    previous = m.value;
    cont.add_row({num(n), num(m.value), num(cf), num(rel)});
  }
  checks.push_back({"continuity modulus", worst_mod <= 1e-6 && decreasing,
                    "max relative difference " + num(worst_mod) +
                        (decreasing ? ", decreasing" : ", not decreasing")});

  std::ostringstream report;
  report << "beta " << num(cfg.beta) << ", profile " << cfg.profile << ", nmax " << cfg.nmax
         << "\nC(beta) " << num(spec.normalization()) << " in [" << num(spec.normalization_lower())
         << ", " << num(spec.normalization_upper()) << "]\n";
  report << render_checks(checks, out.exit_code);
  out.report = report.str();
  out.tables.emplace_back("blocks", std::move(blocks));
  out.tables.emplace_back("asymptotics", std::move(asym));
  out.tables.emplace_back("divergence", std::move(div));
  out.tables.emplace_back("continuity", std::move(cont));
  return out;
}

CommandOutput cmd_montecarlo(const RunConfig& cfg) {
  CommandOutput out;
  const ProcessSpec spec = build_spec(cfg);
  CounterexampleProcess process(spec);
  if (cfg.symmetrize) process = symmetrize(process, derive_seed(cfg.seed, 2));
  const auto batch = SampleBatch::draw(cfg.seed, cfg.draws);
  const auto ugrid = parse_grid(cfg.u_grid, "u-grid");

  csv::Table tail({"u", "estimate", "std_error", "count", "exact", "z_score"});
  for (const auto& t : tail_curve(process, ugrid, batch)) {
    tail.add_row({num(t.threshold), num(t.estimate), num(t.std_error), num(t.count), opt(t.exact),
                  opt(t.z_score())});
  }

  csv::Table lp({"p", "estimate", "std_error", "count", "series_norm", "series_lower",
                 "series_upper"});
  for (double p : parse_grid(cfg.p_grid, "p-grid")) {
    const auto m = estimate_lp(process.envelope(), p, batch);
    std::vector<std::string> row{num(p), num(m.estimate), num(m.std_error), num(m.count)};
    if (p < 4.0) {
      const auto s = sup_lp_series(spec, p);
      row.insert(row.end(), {num(std::pow(s.value, 1.0 / p)), num(std::pow(s.lower, 1.0 / p)),
                             num(std::pow(s.upper, 1.0 / p))});
    } else {
      row.insert(row.end(), {"inf", "inf", "inf"});
    }
    lp.add_row(std::move(row));
  }

  const auto bc = borel_cantelli_diagnostic(spec, cfg.epsilon);
  csv::Table bct({"n", "partial_sum", "remainder_upper", "markov_partial"});
  for (const auto& c : bc.checkpoints) {
    bct.add_row({num(c.n), num(c.partial_sum), num(c.remainder_upper), num(c.bound_partial)});
  }

  csv::Table ub({"partition", "u", "cells", "lhs", "lhs_std_error", "rhs", "rhs_std_error",
                 "slack", "slack_std_error", "exact_lhs", "holds"});
  const std::vector<std::pair<std::string, Partition>> partitions = {
      {"singletons", Partition::singletons(spec.nmax())},
      {"dyadic", Partition::dyadic(spec.nmax())},
      {"single-cell", Partition::single_cell(spec.nmax())}};
  bool union_ok = true;
  for (const auto& [name, partition] : partitions) {
    for (double u : ugrid) {
      const auto r = union_bound_check(process, partition, u, batch);
      union_ok = union_ok && r.holds();
      ub.add_row({name, num(u), num(static_cast<std::uint64_t>(r.cells)), num(r.lhs.estimate),
                  num(r.lhs.std_error), num(r.rhs), num(r.rhs_error), num(r.slack),
                  num(r.slack_error), opt(r.exact_lhs), flag(r.holds())});
    }
  }

  std::vector<std::uint64_t> cuts;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(spec.nmax(), 64); n *= 2) cuts.push_back(n);
  csv::Table ev({"n", "estimate", "std_error", "exact"});
  for (const auto& row : eventual_smallness(spec, cfg.epsilon, cuts, batch)) {
    ev.add_row({num(row.n), num(row.estimate.estimate), num(row.estimate.std_error),
                opt(row.estimate.exact)});
  }

  std::ostringstream report;
  report << "draws " << cfg.draws << ", seed " << cfg.seed
         << (process.is_symmetrized() ? ", symmetrized" : "") << "\n"
         << "sum of P(|g_n| > " << num(cfg.epsilon) << ") in [" << num(bc.sum_lower) << ", "
         << num(bc.sum_upper) << "], Markov bound " << num(bc.markov_bound)
         << (bc.bound_holds ? " holds" : " violated") << "\n"
         << "union bound " << (union_ok ? "within noise on every partition" : "violated beyond noise")
         << "\n";
  out.report = report.str();
  out.tables.emplace_back("tail", std::move(tail));
  out.tables.emplace_back("lp", std::move(lp));
  out.tables.emplace_back("borel_cantelli", std::move(bct));
  out.tables.emplace_back("union_bound", std::move(ub));
  out.tables.emplace_back("eventual", std::move(ev));
  return out;
}

CommandOutput cmd_embedding(const RunConfig& cfg) {
  CommandOutput out;
  std::ostringstream report;
  if (cfg.mode == "orlicz") {
    const auto Psi = YoungFunction::from_record(cfg.phi);
    const auto Phi = YoungFunction::from_record(cfg.psi);
    const auto r = orlicz_weaker(Psi, Phi, parse_grid(cfg.lambdas, "lambdas"),
                                 parse_grid(cfg.u_grid, "u-grid"));
    csv::Table t({"lambda", "u", "log_ratio"});
    for (const auto& row : r.trace) t.add_row({num(row.lambda), num(row.u), num(row.log_ratio)});
    report << Psi.to_record() << " vs " << Phi.to_record() << ": " << to_string(r.verdict) << " ("
           << r.reason << ")\n";
    out.tables.emplace_back("trace", std::move(t));
  } else {
    const auto phi = PsiFunction::from_record(cfg.phi);
    const auto psi = PsiFunction::from_record(cfg.psi);
    const auto grid = GapGrid::toward(std::max(phi.lower(), psi.lower()), psi.upper());
    const auto r = gls_weaker(phi, psi, grid);
    csv::Table t({"p", "gap", "phi", "psi", "ratio"});
    for (const auto& row : r.trace) {
      t.add_row({num(row.p), num(row.gap), num(row.phi), num(row.psi), num(row.ratio)});
    }
    report << phi.to_record() << " vs " << psi.to_record() << ": " << to_string(r.verdict) << " ("
           << r.reason << ")\n";
    out.tables.emplace_back("trace", std::move(t));
  }
  out.report = report.str();
  return out;
}

CommandOutput run(const RunConfig& cfg) {
  try {
    if (cfg.command == "norms") return cmd_norms(cfg);
    if (cfg.command == "counterexample") return cmd_counterexample(cfg);
    if (cfg.command == "montecarlo") return cmd_montecarlo(cfg);
    if (cfg.command == "embedding") return cmd_embedding(cfg);
    throw ParameterError("unknown command '" + cfg.command + "'");
  } catch (const ParameterError& e) {
    CommandOutput out;
    out.exit_code = kValidation;
    out.report = std::string("error: ") + e.what() + "\n";
    return out;
  } catch (const Error& e) {
    CommandOutput out;
    out.exit_code = kNonConvergence;
    out.report = std::string("numerical failure: ") + e.what() + "\n";
    return out;
  }
}

void emit(const RunConfig& cfg, const CommandOutput& output, std::ostream& stream) {
  if (cfg.out.empty()) {
    for (const auto& [name, table] : output.tables) {
      stream << "# " << name << "\n" << table.to_string() << "\n";
    }
    stream << output.report;
    return;
  }
  const std::filesystem::path dir(cfg.out);
  std::filesystem::create_directories(dir);
  for (const auto& [name, table] : output.tables) {
    std::ofstream file(dir / (name + ".csv"), std::ios::binary);
    file << table.to_string();
    if (!file) throw std::runtime_error("cannot write " + (dir / (name + ".csv")).string());
  }
  std::ofstream report(dir / "report.txt", std::ios::binary);
  report << output.report;
  stream << output.report;
}

}  // namespace glslab::cli
