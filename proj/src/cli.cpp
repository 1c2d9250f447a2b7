// Copyright 2026 The gatesep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gatesep/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "gatesep/analyze.hpp"
#include "gatesep/batch.hpp"
#include "gatesep/errors.hpp"
#include "gatesep/io.hpp"
#include "gatesep/passes.hpp"
#include "gatesep/two_qubit_gates.hpp"

namespace gatesep {
namespace {

struct Options {
  std::optional<double> eps_match, eps_unitary, eps_roundtrip;
  bool json = false;
  std::uint64_t seed = 0;
  std::string input;
  std::string output;
  std::string kind;
  std::string gate_name = "H";
  double t_h = 1.0 / std::sqrt(2.0);
  double t_v = 1.0 / std::sqrt(3.0);
  double t = 1.0 / std::sqrt(2.0);
  std::optional<double> r;
  std::size_t count = 1000;
};

Tolerance tolerance_from(const Options& o) {
  Tolerance tol;
  if (o.eps_match) tol.eps_match = *o.eps_match;
  if (o.eps_unitary) tol.eps_unitary = *o.eps_unitary;
  if (o.eps_roundtrip) tol.eps_roundtrip = *o.eps_roundtrip;
  try {
    tol.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return tol;
}

std::string fmt(double x) { return format_real(x); }

void print_matrix(std::ostream& out, const GateMatrix2& m, std::string_view indent) {
  for (std::size_t r = 0; r < 2; ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < 2; ++c) {
      const Complex z = m(r, c);
      out << (c ? ", " : "") << fmt(z.real()) << (z.imag() < 0 ? " - " : " + ")
          << fmt(std::abs(z.imag())) << "i";
    }
    out << "]\n";
  }
}

const char* pass_fail(bool passed) { return passed ? "pass" : "FAIL"; }

GateMatrix2 require_single(const AnyGateMatrix& m, const std::string& path) {
  if (const auto* g = std::get_if<GateMatrix2>(&m)) return *g;
  throw DimensionError(path + ": expected a 2x2 matrix");
}

GateMatrix4 require_two(const AnyGateMatrix& m, const std::string& path) {
  if (const auto* g = std::get_if<GateMatrix4>(&m)) return *g;
  throw DimensionError(path + ": expected a 4x4 matrix");
}

int run_canon(const Options& o, const Tolerance& tol, std::ostream& out) {
  const GateMatrix2 u = require_single(parse_matrix_file(o.input), o.input);
  const CanonicalSingleQubit p = canonicalize(u, tol);
  const PolarForm polar = polar_form(u, tol);
  const double err = max_abs_diff(realize(p), u);
  if (o.json) {
    Json doc = to_json(p);
    doc["polar"] = to_json(polar);
    doc["roundtrip_error"] = err;
    out << doc.dump() << "\n";
  } else {
    out << "theta = " << fmt(p.theta) << "\nphi0  = " << fmt(p.phi0) << "\nphi1  = " << fmt(p.phi1)
        << "\nphi2  = " << fmt(p.phi2) << "\nroundtrip error = " << fmt(err) << "\n";
  }
  return kExitOk;
}

int run_hermitian(const Options& o, const Tolerance& tol, std::ostream& out) {
  const GateMatrix2 u = require_single(parse_matrix_file(o.input), o.input);
  const auto h = classify_hermitian(u, tol);
  const double residual = hermiticity_residual(u);
  if (o.json) {
    out << hermitian_to_json(h, residual).dump() << "\n";
  } else if (!h) {
    out << "not Hermitian (max |U - U^dagger| = " << fmt(residual) << ")\n";
  } else if (h->scalar) {
    out << "Hermitian: " << (h->sign > 0 ? "+I" : "-I") << "\n";
  } else {
    out << "Hermitian: sign = " << h->sign << ", theta = " << fmt(h->theta)
        << ", phi2 = " << fmt(h->phi2) << "\n";
  }
  return h ? kExitOk : kExitNegative;
}

void print_factors(std::ostream& out, const FactorPair& fp) {
  out << "global phase = " << fmt(fp.global_phase) << "\nu1 =\n";
  print_matrix(out, fp.u1, "  ");
  out << "u2 =\n";
  print_matrix(out, fp.u2, "  ");
  out << "residual = " << fmt(fp.residual) << "\n";
}

void print_report(std::ostream& out, const SeparabilityReport& r) {
  out << "verdict: " << to_string(r.verdict) << "\n"
      << "condition 1: diagonal " << pass_fail(r.condition1.diagonal) << " (spread "
      << fmt(r.condition1.diagonal_spread) << "), anti-diagonal "
      << pass_fail(r.condition1.antidiagonal) << " (spread "
      << fmt(r.condition1.antidiagonal_spread) << ")\n"
      << "normalized by " << to_string(r.normalized.pairing) << ", global phase "
      << fmt(r.normalized.global_phase) << "\n";
  for (std::size_t k = 0; k < r.tests.tests.size(); ++k) {
    out << "test " << k + 1 << ": " << pass_fail(r.tests.tests[k].passed) << " (residual "
        << fmt(r.tests.tests[k].residual) << ")\n";
  }
  for (std::size_t k = 0; k < r.det_conditions.conditions.size(); ++k) {
    out << "C" << k + 1 << ": " << pass_fail(r.det_conditions.conditions[k].passed)
        << " (residual " << fmt(r.det_conditions.conditions[k].residual) << ")\n";
  }
  out << "oracle residual: " << fmt(r.oracle_residual) << "\n";
  if (r.reconstruction_gap) out << "note: tests passed but reconstruction failed\n";
  if (r.factors) print_factors(out, *r.factors);
}

int run_separable(const Options& o, const Tolerance& tol, std::ostream& out) {
  const GateMatrix4 g = require_two(parse_matrix_file(o.input), o.input);
  const SeparabilityReport r = analyze(g, tol);
  if (o.json) {
    out << to_json(r).dump() << "\n";
  } else {
    print_report(out, r);
  }
  return r.verdict == Verdict::Separable ? kExitOk : kExitNegative;
}

int run_factor(const Options& o, const Tolerance& tol, std::ostream& out) {
  const GateMatrix4 g = require_two(parse_matrix_file(o.input), o.input);
  const SeparabilityReport r = analyze(g, tol);
  if (!r.factors) {
    if (o.json) {
      out << to_json(r).dump() << "\n";
    } else {
      print_report(out, r);
    }
    return kExitNegative;
  }
  if (o.json) {
    out << to_json(*r.factors).dump() << "\n";
  } else {
    print_factors(out, *r.factors);
  }
  return kExitOk;
}

std::filesystem::path optimized_path(const std::filesystem::path& input) {
  std::filesystem::path p = input;
  p.replace_extension(".opt.txt");
  return p;
}

int run_optimize(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Circuit c = parse_circuit_file(o.input, tol);
  const OptimizeResult result = optimize(c, tol);
  const std::filesystem::path target = o.output.empty() ? optimized_path(o.input) : std::filesystem::path(o.output);
  write_text_file(target, circuit_to_text(result.circuit));
  const Json doc{{"before", to_json(result.before)},
                 {"after", to_json(result.after)},
                 {"global_phase", result.circuit.global_phase()},
                 {"output", target.string()}};
  out << doc.dump() << "\n";
  return kExitOk;
}

int run_gen(const Options& o, const Tolerance& tol, std::ostream& out) {
  Json doc;
  if (o.kind == "pdbs") {
    doc = matrix_to_json(pdbs(o.t_h, o.t_v));
  } else if (o.kind == "pidbs") {
    doc = matrix_to_json(o.r ? pidbs(o.t, *o.r) : pidbs(o.t));
  } else if (o.kind == "named") {
    doc = matrix_to_json(named_gate(o.gate_name));
  } else if (o.kind == "cnot") {
    doc = matrix_to_json(cnot());
  } else {
    const RandomKind kind = parse_random_kind(o.kind);
    doc = matrix_to_json(gen_random(kind, o.seed, tol));
    doc["kind"] = to_string(kind);
    doc["seed"] = o.seed;
  }
  const std::string text = doc.dump() + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    write_text_file(o.output, text);
  }
  return kExitOk;
}

int run_screen(const Options& o, const Tolerance& tol, std::ostream& out) {
  const RandomKind kind = parse_random_kind(o.kind);
  const auto gates = generate_two_qubit(kind, o.seed, o.count, tol);
  const auto outcomes = screen(gates, tol);
  std::size_t separable = 0, disagreements = 0, inconsistencies = 0, errors = 0, gaps = 0;
  for (const auto& s : outcomes) {
    separable += s.error.empty() && s.verdict == Verdict::Separable;
    disagreements += s.error.empty() && (s.verdict == Verdict::Separable) != s.oracle_separable;
    inconsistencies += s.inconsistency;
    errors += !s.error.empty() && !s.inconsistency;
    gaps += s.reconstruction_gap;
  }
  const Json doc{{"kind", to_string(kind)},
                 {"seed", o.seed},
                 {"count", o.count},
                 {"separable", separable},
                 {"genuine", o.count - separable - inconsistencies - errors},
                 {"oracle_disagreements", disagreements},
                 {"inconsistencies", inconsistencies},
                 {"errors", errors},
                 {"reconstruction_gaps", gaps}};
  if (o.json) {
    out << doc.dump() << "\n";
  } else {
    for (const auto& [key, value] : doc.items()) out << key << ": " << value.dump() << "\n";
  }
  return inconsistencies + errors + disagreements == 0 ? kExitOk : kExitError;
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Separability analysis and circuit optimization for one- and two-qubit gates.",
               "gatesep"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--eps-match", o.eps_match, "Tolerance for entrywise verdict equalities")
      ->check(CLI::PositiveNumber);
  app.add_option("--eps-unitary", o.eps_unitary, "Tolerance for accepting a matrix as unitary")
      ->check(CLI::PositiveNumber);
  app.add_option("--eps-roundtrip", o.eps_roundtrip, "Tolerance for parameter round trips")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "Emit one JSON document on standard output");
  app.add_option("--seed", o.seed, "Seed for random generators");

  auto* canon = app.add_subcommand("canon", "Canonical parameters of a 2x2 unitary");
  canon->add_option("matrix", o.input, "Matrix JSON file")->required();
  auto* hermitian = app.add_subcommand("hermitian", "Classify a 2x2 unitary as self-inverse");
  hermitian->add_option("matrix", o.input, "Matrix JSON file")->required();
  auto* separable = app.add_subcommand("separable", "Decide whether a 4x4 unitary is a product");
  separable->add_option("matrix", o.input, "Matrix JSON file")->required();
  auto* factor = app.add_subcommand("factor", "Factor a separable 4x4 unitary");
  factor->add_option("matrix", o.input, "Matrix JSON file")->required();
  auto* opt = app.add_subcommand("optimize", "Optimize a circuit file");
  opt->add_option("circuit", o.input, "Circuit text file")->required();
  opt->add_option("-o,--output", o.output, "Output path (default <circuit>.opt.txt)");
  auto* gen = app.add_subcommand("gen", "Write a matrix: single, separable, genuine, pdbs, pidbs, named, cnot");
  gen->add_option("kind", o.kind, "Generator kind")->required();
  gen->add_option("-o,--output", o.output, "Output path (default standard output)");
  gen->add_option("--t-h", o.t_h, "pdbs: horizontal transmission");
  gen->add_option("--t-v", o.t_v, "pdbs: vertical transmission");
  gen->add_option("--t", o.t, "pidbs: transmission");
  gen->add_option("--r", o.r, "pidbs: reflection (default sqrt(1 - t^2))");
  gen->add_option("--name", o.gate_name, "named: I, X, iY, Z, H or P(<xi>)");
  auto* scr = app.add_subcommand("screen", "Screen generated gates against the oracle in parallel");
  scr->add_option("kind", o.kind, "separable or genuine")->required();
  scr->add_option("--count", o.count, "Number of gates")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    const Tolerance tol = tolerance_from(o);
    if (canon->parsed()) return run_canon(o, tol, out);
    if (hermitian->parsed()) return run_hermitian(o, tol, out);
    if (separable->parsed()) return run_separable(o, tol, out);
    if (factor->parsed()) return run_factor(o, tol, out);
    if (opt->parsed()) return run_optimize(o, tol, out);
    if (gen->parsed()) return run_gen(o, tol, out);
    if (scr->parsed()) return run_screen(o, tol, out);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace gatesep
