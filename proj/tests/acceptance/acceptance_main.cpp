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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gatesep/analyze.hpp"
#include "gatesep/batch.hpp"
#include "gatesep/io.hpp"
#include "gatesep/passes.hpp"
#include "gatesep/random.hpp"
#include "gatesep/single_qubit.hpp"
#include "gatesep/two_qubit_gates.hpp"

namespace {

using namespace gatesep;

struct Outcome {
  bool passed;
  std::string detail;
};

constexpr std::uint64_t kSeed = 20260101;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double angle_gap(double x, double y) { return std::abs(wrap_angle(x - y)); }

Outcome canonical_round_trip() {
  const Tolerance tol;
  const auto params = generate_canonical(kSeed, 100000);
  const auto errors = canonical_roundtrip_errors(params, tol);
  const double worst = *std::max_element(errors.begin(), errors.end());
  return {worst <= 1e-12, "100000 draws, max error " + num(worst)};
}

Outcome hermitian_table() {
  const Tolerance tol;
  struct Row {
    NamedGate gate;
    double theta, phi2;
    bool phi2_free;
  };
  const Row rows[] = {{NamedGate::H, kPi / 4, 3 * kPi / 2, false},
                      {NamedGate::X, kPi / 2, 3 * kPi / 2, false},
                      {NamedGate::iY, kPi / 2, 0.0, false},
                      {NamedGate::Z, 0.0, 0.0, true}};
  bool ok = true;
  double worst = 0.0;
  for (const auto& r : rows) {
    const auto h = classify_hermitian(named_gate(r.gate), tol);
    if (!h || h->scalar) {
      ok = false;
      continue;
    }
    worst = std::max(worst, std::abs(h->theta - r.theta));
    if (!r.phi2_free) worst = std::max(worst, angle_gap(h->phi2, r.phi2));
  }
  ok = ok && worst <= 1e-12;
  int rejected = 0, accepted = 0;
  for (double xi : {kPi / 7, 1.0, 2.5}) rejected += !classify_hermitian(named_gate(NamedGate::P, xi), tol);
  for (double xi : {0.0, kPi}) accepted += classify_hermitian(named_gate(NamedGate::P, xi), tol).has_value();
  ok = ok && rejected == 3 && accepted == 2;
  return {ok, "H, X, iY, Z max angle error " + num(worst) + "; P rejected " +
                  std::to_string(rejected) + "/3, accepted " + std::to_string(accepted) + "/2"};
}

GateMatrix4 controlled_u(Complex a, Complex b, double phi) {
  const Complex w = std::polar(1.0, phi);
  return controlled(GateMatrix2({w * a, w * b, -w * std::conj(b), w * std::conj(a)}));
}

Outcome controlled_u_counter_example() {
  const Tolerance tol;
  Rng rng(kSeed);
  int good = 0;
  for (int k = 0; k < 100; ++k) {
    const double mod_a = rng.uniform(0.0, 1.0 - 1e-3);
    const Complex a = std::polar(mod_a, rng.uniform(-kPi, kPi));
    const Complex b = std::polar(std::sqrt(1 - mod_a * mod_a), rng.uniform(-kPi, kPi));
    const SeparabilityReport r = analyze(controlled_u(a, b, rng.uniform(-kPi, kPi)), tol);
    good += r.verdict == Verdict::GenuineTwoQubit && !r.condition1.diagonal;
  }
  const bool special = analyze(controlled_u(1.0, 0.0, 0.9), tol).verdict == Verdict::Separable;
  return {good == 100 && special, std::to_string(good) + "/100 genuine with unequal diagonal; a=1, b=0 " +
                                      (special ? "separable" : "NOT separable")};
}

Outcome determinant_insufficiency() {
  const Tolerance tol;
  int good = 0;
  for (double phi : {kPi / 6, kPi / 3, 2.0}) {
    const GateMatrix4 g =
        GateMatrix4::diagonal({1.0, 1.0, std::polar(1.0, phi), std::polar(1.0, -phi)});
    const SeparabilityReport r = analyze(g, tol);
    good += r.det_conditions.all_passed() && !r.tests.tests[1].passed &&
            r.verdict == Verdict::GenuineTwoQubit;
  }
  return {good == 3, std::to_string(good) + "/3 pass C1-C4, fail Test 2, genuine"};
}

Outcome beam_splitters() {
  const Tolerance tol;
  const bool pdbs_genuine =
      analyze(pdbs(1 / std::sqrt(2.0), 1 / std::sqrt(3.0)), tol).verdict == Verdict::GenuineTwoQubit;
  const double t = 1 / std::sqrt(2.0), r = 1 / std::sqrt(2.0);
  const SeparabilityReport rep = analyze(pidbs(t, r), tol);
  double gap = 1.0;
  if (rep.factors) {
    const Complex ir{0.0, r};
    const GateMatrix2 spatial({t, ir, ir, t});
    gap = std::max(phase_insensitive_distance(to_dense(rep.factors->u1), to_dense(GateMatrix2::identity())),
                   phase_insensitive_distance(to_dense(rep.factors->u2), to_dense(spatial)));
  }
  return {pdbs_genuine && rep.factors && gap <= 1e-9,
          std::string("PDBS ") + (pdbs_genuine ? "genuine" : "NOT genuine") + "; PIDBS factor error " + num(gap)};
}

Outcome oracle_agreement() {
  const Tolerance tol;
  auto gates = generate_two_qubit(RandomKind::Separable, kSeed, 10000, tol);
  const auto genuine = generate_two_qubit(RandomKind::Genuine, kSeed + 1, 10000, tol);
  gates.insert(gates.end(), genuine.begin(), genuine.end());
  const auto outcomes = screen(gates, tol);
  std::size_t agree = 0, inconsistent = 0, errors = 0, expected = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& s = outcomes[i];
    inconsistent += s.inconsistency;
    errors += !s.error.empty();
    agree += s.error.empty() && (s.verdict == Verdict::Separable) == s.oracle_separable;
    expected += s.error.empty() && (s.verdict == Verdict::Separable) == (i < 10000);
  }
  return {agree == gates.size() && inconsistent == 0 && errors == 0 && expected == gates.size(),
          std::to_string(agree) + "/" + std::to_string(gates.size()) + " agree, " +
              std::to_string(inconsistent) + " inconsistencies, " + std::to_string(errors) + " errors"};
}

Outcome factor_round_trip() {
  const Tolerance tol;
  const auto gates = generate_two_qubit(RandomKind::Separable, kSeed + 2, 10000, tol);
  const auto residuals = factor_residuals(gates, tol);
  const double worst = *std::max_element(residuals.begin(), residuals.end());
  return {worst <= 1e-9, "10000 gates, max residual " + num(worst)};
}

Outcome three_line_reduction() {
  const Tolerance tol;
  const Circuit c = parse_circuit_file(std::string(GATESEP_FIXTURE_DIR) + "/fig1.txt", tol);
  const OptimizeResult r = optimize(c, tol);
  const double gap = phase_insensitive_distance(circuit_unitary(c), circuit_unitary(r.circuit));
  const bool ok = r.before.gate_count == 3 && r.before.quantum_cost == 2 && r.before.width == 3 &&
                  r.after.gate_count == 2 && r.after.quantum_cost == 1 && r.after.width == 2 &&
                  gap <= 1e-9;
  return {ok, "gate_count " + std::to_string(r.before.gate_count) + "->" +
                  std::to_string(r.after.gate_count) + ", quantum_cost " +
                  std::to_string(r.before.quantum_cost) + "->" + std::to_string(r.after.quantum_cost) +
                  ", width " + std::to_string(r.before.width) + "->" + std::to_string(r.after.width) +
                  ", unitary gap " + num(gap)};
}

Outcome pass_soundness() {
  const Tolerance tol;
  Rng rng(kSeed);
  int sound = 0, monotone = 0, idempotent = 0;
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Circuit c = random_circuit(rng, 3, 8, tol);
    const OptimizeResult once = optimize(c, tol);
    const double gap = phase_insensitive_distance(circuit_unitary(c), circuit_unitary(once.circuit));
    worst = std::max(worst, gap);
    sound += gap <= 1e-9;
    monotone += once.after.dominated_by(once.before);
    const OptimizeResult twice = optimize(once.circuit, tol);
    bool same = twice.after == once.after && twice.circuit.gates().size() == once.circuit.gates().size();
    for (std::size_t i = 0; same && i < once.circuit.gates().size(); ++i) {
      const auto& x = once.circuit.gates()[i];
      const auto& y = twice.circuit.gates()[i];
      same = x.label() == y.label() && std::ranges::equal(x.lines(), y.lines());
    }
    idempotent += same;
  }
  return {sound == 1000 && monotone == 1000 && idempotent == 1000,
          "1000 circuits: sound " + std::to_string(sound) + ", monotone " + std::to_string(monotone) +
              ", idempotent " + std::to_string(idempotent) + ", max gap " + num(worst)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double time_limit_s;  // 0: none stated
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "canonical round-trip", canonical_round_trip, 5.0},
      {2, "Hermitian table", hermitian_table, 0.0},
      {3, "controlled-U counter-example", controlled_u_counter_example, 0.0},
      {4, "determinant conditions insufficient", determinant_insufficiency, 0.0},
      {5, "PDBS / PIDBS", beam_splitters, 0.0},
      {6, "oracle agreement", oracle_agreement, 60.0},
      {7, "factor round-trip", factor_round_trip, 0.0},
      {8, "three-line circuit reduction", three_line_reduction, 0.0},
      {9, "pass soundness", pass_soundness, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      o.passed = false;
      o.detail += "; over the " + num(c.time_limit_s) + " s budget";
    }
    failures += !o.passed;
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed (seed %llu)\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria), static_cast<unsigned long long>(kSeed));
  return failures == 0 ? 0 : 1;
}
