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

#include "gatesep/errors.hpp"
#include "gatesep/passes.hpp"
#include "gatesep/random.hpp"
#include "gatesep/single_qubit.hpp"
#include "gatesep/two_qubit_gates.hpp"
#include "test_support.hpp"

namespace gatesep {
namespace {

using testing::phase_distance;

const GateMatrix2 kT = GateMatrix2::diagonal({1.0, std::polar(1.0, kPi / 4)});
const GateMatrix2 kH = named_gate(NamedGate::H);
const GateMatrix2 kX = named_gate(NamedGate::X);

Circuit reducible_circuit() {
  Circuit c(3);
  c.append(GateInstance::two("U_l", 0, 1, cnot()));
  c.append(GateInstance::two("U_a", 1, 2, tensor2x2(kH, kT)));
  c.append(GateInstance::single("U_a2_inv", 2, adjoint(kT)));
  return c;
}

double unitary_gap(const Circuit& a, const Circuit& b) {
  return phase_insensitive_distance(circuit_unitary(a), circuit_unitary(b));
}

bool same_structure(const Circuit& a, const Circuit& b) {
  if (a.gates().size() != b.gates().size()) return false;
  for (std::size_t i = 0; i < a.gates().size(); ++i) {
    const auto& x = a.gates()[i];
    const auto& y = b.gates()[i];
    if (x.label() != y.label() || !std::ranges::equal(x.lines(), y.lines())) return false;
  }
  return true;
}

TEST(Decompose, SplitsHadamardPair) {
  Circuit c(2);
  c.append(GateInstance::two("hh", 0, 1, tensor2x2(kH, kH)));
  const Circuit d = pass_decompose(c, Tolerance{});
  ASSERT_EQ(d.gates().size(), 2u);
  EXPECT_EQ(d.gates()[0].label(), "hh_1");
  EXPECT_EQ(d.gates()[0].lines()[0], 0u);
  EXPECT_EQ(d.gates()[1].lines()[0], 1u);
  EXPECT_LE(phase_distance(d.gates()[0].matrix2(), kH), 1e-12);
  EXPECT_LE(phase_distance(d.gates()[1].matrix2(), kH), 1e-12);
  EXPECT_LE(max_abs_diff(circuit_unitary(d), circuit_unitary(c)), 1e-12);
}

TEST(Decompose, LeavesGenuineGates) {
  Circuit c(3);
  c.append(GateInstance::two("a", 0, 1, cnot()));
  c.append(GateInstance::two("b", 2, 1, cnot()));
  const Circuit d = pass_decompose(c, Tolerance{});
  EXPECT_TRUE(same_structure(c, d));
}

TEST(Decompose, ThreeLineExample) {
  const Circuit d = pass_decompose(reducible_circuit(), Tolerance{});
  ASSERT_EQ(d.gates().size(), 4u);
  EXPECT_EQ(d.gates()[1].lines()[0], 1u);
  EXPECT_EQ(d.gates()[2].lines()[0], 2u);
  EXPECT_LE(phase_distance(d.gates()[2].matrix2(), kT), 1e-12);
}

TEST(Cancel, XTwiceVanishes) {
  Circuit c(1);
  c.append(GateInstance::single("x1", 0, kX));
  c.append(GateInstance::single("x2", 0, kX));
  EXPECT_TRUE(pass_cancel_inverses(c, Tolerance{}).gates().empty());
}

TEST(Cancel, DisjointGateDoesNotBlock) {
  Circuit c(2);
  c.append(GateInstance::single("h1", 0, kH));
  c.append(GateInstance::single("x", 1, kX));
  c.append(GateInstance::single("h2", 0, kH));
  const Circuit out = pass_cancel_inverses(c, Tolerance{});
  ASSERT_EQ(out.gates().size(), 1u);
  EXPECT_EQ(out.gates()[0].label(), "x");
  EXPECT_LE(unitary_gap(out, c), 1e-12);
}

TEST(Cancel, SharedLineBlocks) {
  Circuit c(2);
  c.append(GateInstance::single("h1", 0, kH));
  c.append(GateInstance::two("cx", 0, 1, cnot()));
  c.append(GateInstance::single("h2", 0, kH));
  EXPECT_TRUE(same_structure(pass_cancel_inverses(c, Tolerance{}), c));
}

TEST(Cancel, TracksScalarPhase) {
  Circuit c(1);
  c.append(GateInstance::single("a", 0, kT));
  c.append(GateInstance::single("b", 0, std::polar(1.0, 0.4) * adjoint(kT)));
  const Circuit out = pass_cancel_inverses(c, Tolerance{});
  EXPECT_TRUE(out.gates().empty());
  EXPECT_NEAR(out.global_phase(), 0.4, 1e-15);
  EXPECT_LE(max_abs_diff(circuit_unitary(out), circuit_unitary(c)), 1e-15);
}

TEST(Cancel, ReversedTwoQubitPair) {
  Rng rng(1);
  const GateMatrix4 g = random_genuine(rng, Tolerance{});
  Circuit c(2);
  c.append(GateInstance::two("g", 0, 1, g));
  c.append(GateInstance::two("g_inv", 1, 0, swap_qubits(adjoint(g))));
  EXPECT_TRUE(pass_cancel_inverses(c, Tolerance{}).gates().empty());
}

TEST(Cancel, DifferentLineSetsDoNotCancel) {
  Circuit c(3);
  c.append(GateInstance::two("a", 0, 1, cnot()));
  c.append(GateInstance::two("b", 0, 2, cnot()));
  EXPECT_EQ(pass_cancel_inverses(c, Tolerance{}).gates().size(), 2u);
}

TEST(Cancel, NestedPairsReachFixedPoint) {
  Circuit c(1);
  c.append(GateInstance::single("h", 0, kH));
  c.append(GateInstance::single("t", 0, kT));
  c.append(GateInstance::single("t_inv", 0, adjoint(kT)));
  c.append(GateInstance::single("h_inv", 0, kH));
  EXPECT_TRUE(pass_cancel_inverses(c, Tolerance{}).gates().empty());
}

TEST(Absorb, PrecedingGateMultipliesInputSide) {
  Circuit c(2);
  c.append(GateInstance::single("h", 0, kH));
  c.append(GateInstance::two("cx", 0, 1, cnot()));
  const Circuit out = pass_absorb(c, Tolerance{});
  ASSERT_EQ(out.gates().size(), 1u);
  EXPECT_LE(max_abs_diff(out.gates()[0].matrix4(),
                         cnot() * tensor2x2(kH, GateMatrix2::identity())),
            1e-15);
}

TEST(Absorb, FollowingGatePrefersEarlierHost) {
  Circuit c(2);
  c.append(GateInstance::two("cx1", 0, 1, cnot()));
  c.append(GateInstance::single("h", 1, kH));
  c.append(GateInstance::two("cx2", 0, 1, cnot()));
  const Circuit out = pass_absorb(c, Tolerance{});
  ASSERT_EQ(out.gates().size(), 2u);
  EXPECT_LE(max_abs_diff(out.gates()[0].matrix4(),
                         tensor2x2(GateMatrix2::identity(), kH) * cnot()),
            1e-15);
  EXPECT_EQ(out.gates()[1].matrix4(), cnot());
}

TEST(Absorb, LoneGateStays) {
  Circuit c(3);
  c.append(GateInstance::two("cx", 0, 1, cnot()));
  c.append(GateInstance::single("h", 2, kH));
  const Circuit out = pass_absorb(c, Tolerance{});
  EXPECT_EQ(out.gates().size(), 2u);
  EXPECT_EQ(metrics(out).quantum_cost, 2u);
}

TEST(Absorb, QuantumCostAfterAbsorption) {
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const Circuit c = random_circuit(rng, 3, 8, Tolerance{});
    const Circuit out = pass_absorb(c, Tolerance{});
    std::size_t two = 0;
    for (const auto& g : out.gates()) two += g.arity() == 2;
    EXPECT_EQ(metrics(out).quantum_cost, metrics(c).quantum_cost);
    EXPECT_EQ(metrics(out).quantum_cost, metrics(out).gate_count);
    EXPECT_GE(metrics(out).quantum_cost, two);
  }
}

TEST(Optimize, ThreeLineExample) {
  const Circuit a = reducible_circuit();
  const OptimizeResult r = optimize(a, Tolerance{});
  EXPECT_EQ(r.before, metrics(a));
  EXPECT_EQ(r.after.gate_count, 2u);
  EXPECT_EQ(r.after.quantum_cost, 1u);
  EXPECT_EQ(r.after.width, 2u);
  EXPECT_LE(unitary_gap(r.circuit, a), 1e-9);
  // Order of passes does not change the outcome.
  const Tolerance tol;
  const Circuit narrative = pass_cancel_inverses(pass_decompose(a, tol), tol);
  const Circuit cancel_first = pass_cancel_inverses(pass_decompose(pass_cancel_inverses(a, tol), tol), tol);
  EXPECT_EQ(metrics(narrative), metrics(r.circuit));
  EXPECT_EQ(metrics(cancel_first), metrics(r.circuit));
}

TEST(Optimize, AllGenuineUnchanged) {
  Rng rng(3);
  Circuit c(3);
  c.append(GateInstance::two("a", 0, 1, random_genuine(rng, Tolerance{})));
  c.append(GateInstance::two("b", 1, 2, random_genuine(rng, Tolerance{})));
  const OptimizeResult r = optimize(c, Tolerance{});
  EXPECT_EQ(r.before, r.after);
  EXPECT_TRUE(same_structure(r.circuit, c));
}

TEST(Optimize, RefusesRewritesThatRaiseACost) {
  // Splitting the product adds a gate that nothing cancels.
  Circuit c(2);
  c.append(GateInstance::two("p", 0, 1, tensor2x2(kH, kT)));
  const OptimizeResult r = optimize(c, Tolerance{});
  EXPECT_TRUE(same_structure(r.circuit, c));
}

TEST(Passes, PreserveSemanticsOnRandomCircuits) {
  Rng rng(4);
  const Tolerance tol;
  for (int k = 0; k < 300; ++k) {
    const Circuit c = random_circuit(rng, 3, 8, tol);
    EXPECT_LE(unitary_gap(pass_decompose(c, tol), c), tol.eps_match);
    EXPECT_LE(unitary_gap(pass_cancel_inverses(c, tol), c), tol.eps_match);
    EXPECT_LE(unitary_gap(pass_absorb(c, tol), c), tol.eps_match);
  }
}

TEST(Optimize, MonotoneIdempotentAndSound) {
  Rng rng(5);
  const Tolerance tol;
  for (int k = 0; k < 300; ++k) {
    const Circuit c = random_circuit(rng, 3, 8, tol);
    const OptimizeResult once = optimize(c, tol);
    EXPECT_TRUE(once.after.dominated_by(once.before));
    EXPECT_LE(unitary_gap(once.circuit, c), 1e-9);
    const OptimizeResult twice = optimize(once.circuit, tol);
    EXPECT_EQ(twice.after, once.after);
    EXPECT_TRUE(same_structure(twice.circuit, once.circuit));
  }
}

}  // namespace
}  // namespace gatesep
