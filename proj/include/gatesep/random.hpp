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

#ifndef GATESEP_RANDOM_HPP
#define GATESEP_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <variant>

#include "gatesep/circuit.hpp"
#include "gatesep/matrix.hpp"
#include "gatesep/single_qubit.hpp"

namespace gatesep {

/// Mersenne Twister (std::mt19937_64) with a fixed 53-bit mapping to
/// doubles, so a seed produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform in [0, n).
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 of (base, index): independent per-item seeds so batch
/// generation does not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

enum class RandomKind { Single, Separable, Genuine };

/// Throws UsageError for anything but "single", "separable", "genuine".
RandomKind parse_random_kind(std::string_view name);
std::string_view to_string(RandomKind kind);

/// theta uniform in [0, pi/2), phases uniform in [-pi, pi).
CanonicalSingleQubit random_canonical(Rng& rng);
GateMatrix2 random_single(Rng& rng);
/// e^{i phi} (A (x) B).
GateMatrix4 random_separable(Rng& rng);
/// (A (x) B) CNOT (C (x) D), redrawn until the realignment oracle
/// rejects it.
GateMatrix4 random_genuine(Rng& rng, const Tolerance& tol);

using AnyGateMatrix = std::variant<GateMatrix2, GateMatrix4>;

/// Deterministic in (kind, seed).
AnyGateMatrix gen_random(RandomKind kind, std::uint64_t seed, const Tolerance& tol = {});

/// Random circuit over `num_lines` lines (>= 2) with 1..max_gates gates drawn
/// from: random single-qubit gate, random separable gate, random genuine
/// gate, or the inverse of an earlier gate on the same lines (to give the
/// cancellation pass something to find).
Circuit random_circuit(Rng& rng, std::size_t num_lines, std::size_t max_gates,
                       const Tolerance& tol);

}  // namespace gatesep

#endif  // GATESEP_RANDOM_HPP
