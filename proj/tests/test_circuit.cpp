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

#include <gtest/gtest.h>

#include "gatesep/circuit.hpp"
#include "gatesep/errors.hpp"
#include "gatesep/random.hpp"
#include "gatesep/single_qubit.hpp"
#include "gatesep/two_qubit_gates.hpp"
#include "test_support.hpp"

namespace gatesep {
namespace {

const GateMatrix2 kT = GateMatrix2::diagonal({1.0, std::polar(1.0, kPi / 4)});

Circuit reducible_circuit() {
  Circuit c(3);
  c.append(GateInstance::two("U_l", 0, 1, cnot()));
  c.append(GateInstance::two("U_a", 1, 2, tensor2x2(named_gate(NamedGate::H), kT)));
  c.append(GateInstance::single("U_a2_inv", 2, adjoint(kT)));
  return c;
}

Circuit reduced_circuit() {
  Circuit c(3);
  c.append(GateInstance::two("U_l", 0, 1, cnot()));
  c.append(GateInstance::single("U_a1", 1, named_gate(NamedGate::H)));
  return c;
}

TEST(Metrics, EmptyCircuit) {
  EXPECT_EQ(metrics(Circuit(3)), CostMetrics{});
}

TEST(Metrics, ThreeLineExample) {
  const CostMetrics a = metrics(reducible_circuit());
  EXPECT_EQ(a.gate_count, 3u);
  EXPECT_EQ(a.quantum_cost, 2u);
  EXPECT_EQ(a.width, 3u);
  EXPECT_EQ(a.depth, 3u);
  const CostMetrics c = metrics(reduced_circuit());
  EXPECT_EQ(c.gate_count, 2u);
  EXPECT_EQ(c.quantum_cost, 1u);
  EXPECT_EQ(c.width, 2u);
  EXPECT_EQ(c.depth, 2u);
}

TEST(Metrics, IsolatedSingleQubitGatesCost) {
  Circuit c(3);
  c.append(GateInstance::single("h", 2, named_gate(NamedGate::H)));
  c.append(GateInstance::single("x", 0, named_gate(NamedGate::X)));
  c.append(GateInstance::two("cx", 0, 1, cnot()));
  const CostMetrics m = metrics(c);
  EXPECT_EQ(m.quantum_cost, 2u);  // cx plus the lone H on line 2
  EXPECT_EQ(m.depth, 2u);
  EXPECT_EQ(m.width, 3u);
}

TEST(Metrics, InvariantsOnRandomCircuits) {
  Rng rng(1);
  for (int k = 0; k < 300; ++k) {
    const Circuit c = random_circuit(rng, 4, 10, Tolerance{});
    const CostMetrics m = metrics(c);
    EXPECT_EQ(m.gate_count, c.gates().size());
    EXPECT_LE(m.quantum_cost, m.gate_count);
    EXPECT_LE(m.width, c.num_lines());
    EXPECT_LE(m.depth, m.gate_count);
  }
}

TEST(Circuit, RejectsBadLines) {
  EXPECT_THROW(Circuit(0), LineIndexError);
  Circuit c(2);
  EXPECT_THROW(c.append(GateInstance::single("x", 2, named_gate(NamedGate::X))), LineIndexError);
  EXPECT_THROW(c.append(GateInstance::two("cx", 0, 2, cnot())), LineIndexError);
  EXPECT_THROW(GateInstance::two("cx", 1, 1, cnot()), LineIndexError);
}

TEST(Circuit, GlobalPhaseWraps) {
  Circuit c(1);
  c.add_global_phase(3.0);
  c.add_global_phase(3.0);
  EXPECT_NEAR(c.global_phase(), 6.0 - 2 * kPi, 1e-15);
}

TEST(CircuitUnitary, EmptyIsIdentity) {
  const DenseMatrix u = circuit_unitary(Circuit(2));
  EXPECT_EQ(max_abs_diff(u, DenseMatrix::identity(4)), 0.0);
}

TEST(CircuitUnitary, FirstLineIsMostSignificant) {
  Circuit c(2);
  c.append(GateInstance::single("x", 0, named_gate(NamedGate::X)));
  const GateMatrix4 expected({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
  EXPECT_EQ(max_abs_diff(circuit_unitary(c), to_dense(expected)), 0.0);
}

TEST(CircuitUnitary, ReversedLinesSwapQubits) {
  Rng rng(2);
  const GateMatrix4 g = random_genuine(rng, Tolerance{});
  Circuit c(2);
  c.append(GateInstance::two("g", 1, 0, g));
  EXPECT_LE(max_abs_diff(circuit_unitary(c), to_dense(swap_qubits(g))), 1e-15);
}

TEST(CircuitUnitary, CnotAcrossAGap) {
  // Control line 0, target line 2 of 3: |1 0 0> -> |1 0 1>, |0 1 0> fixed.
  Circuit c(3);
  c.append(GateInstance::two("cx", 0, 2, cnot()));
  const DenseMatrix u = circuit_unitary(c);
  EXPECT_EQ(u(0b101, 0b100), Complex(1.0));
  EXPECT_EQ(u(0b010, 0b010), Complex(1.0));
  EXPECT_EQ(u(0b111, 0b110), Complex(1.0));
}

TEST(CircuitUnitary, OrderIsRightToLeft) {
  Circuit c(1);
  const GateMatrix2 h = named_gate(NamedGate::H);
  c.append(GateInstance::single("h", 0, h));
  c.append(GateInstance::single("t", 0, kT));
  EXPECT_LE(max_abs_diff(circuit_unitary(c), to_dense(kT * h)), 1e-15);
}

TEST(CircuitUnitary, ReducedVariantAgrees) {
  EXPECT_LE(phase_insensitive_distance(circuit_unitary(reducible_circuit()), circuit_unitary(reduced_circuit())), 1e-9);
}

TEST(CircuitUnitary, TooManyLines) {
  EXPECT_THROW(circuit_unitary(Circuit(kMaxVerifiedLines + 1)), TooManyLines);
  EXPECT_NO_THROW(circuit_unitary(Circuit(kMaxVerifiedLines)));
}

}  // namespace
}  // namespace gatesep
