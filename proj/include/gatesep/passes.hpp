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

#ifndef GATESEP_PASSES_HPP
#define GATESEP_PASSES_HPP

#include "gatesep/circuit.hpp"

namespace gatesep {

// Adjacency: two gates are adjacent on a line when no gate between them
// touches that line.

/// Replaces every separable two-qubit gate by its factors, the first factor
/// (carrying the global phase) on the gate's first line. Gates whose
/// analysis fails for any reason are left alone.
Circuit pass_decompose(const Circuit& c, const Tolerance& tol);

/// Removes adjacent pairs (G, G') on the same line set whose product G'G is
/// a scalar multiple of the identity within eps_match; the scalar's phase
/// goes to the circuit's global phase. Runs to a fixed point.
Circuit pass_cancel_inverses(const Circuit& c, const Tolerance& tol);

/// Folds every single-qubit gate into an adjacent two-qubit gate on its
/// line: into the preceding one (output side) when it exists, else into the
/// following one (input side). Runs to a fixed point.
Circuit pass_absorb(const Circuit& c, const Tolerance& tol);

struct OptimizeResult {
  Circuit circuit;
  CostMetrics before;
  CostMetrics after;
};

/// Decompose-then-cancel to a fixed point, accepting a rewrite only when no
/// metric gets worse. When the full rewrite is not acceptable, single
/// decompositions and single cancellations are tried one at a time. The
/// result is therefore dominated by the input in all four metrics and is a
/// fixed point of `optimize` itself. `after.quantum_cost` is the cost with
/// single-qubit gates absorbed; the returned circuit keeps them.
OptimizeResult optimize(const Circuit& c, const Tolerance& tol);

}  // namespace gatesep

#endif  // GATESEP_PASSES_HPP
