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

#ifndef GATESEP_BATCH_HPP
#define GATESEP_BATCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gatesep/analyze.hpp"
#include "gatesep/random.hpp"
#include "gatesep/single_qubit.hpp"

namespace gatesep {

/// Per-gate outcome of a screening run. Errors are captured, not thrown, so
/// one bad item cannot abort a batch.
struct ScreenOutcome {
  Verdict verdict = Verdict::GenuineTwoQubit;
  bool oracle_separable = false;
  bool reconstruction_gap = false;
  bool inconsistency = false;  ///< analyze threw InternalInconsistency
  std::string error;           ///< any other library error, else empty
  double oracle_residual = 0.0;
  double factor_residual = 0.0;  ///< 0 unless Separable

  friend bool operator==(const ScreenOutcome&, const ScreenOutcome&) = default;
};

// Item i of every batch depends only on input i (or on derive_seed(base, i)),
// so the OpenMP kernels and the serial references return identical vectors.

/// max |realize(canonicalize(realize(p))) - realize(p)| per draw.
std::vector<double> canonical_roundtrip_errors(std::span<const CanonicalSingleQubit> params,
                                               const Tolerance& tol);
std::vector<ScreenOutcome> screen(std::span<const GateMatrix4> gates, const Tolerance& tol);
/// Residual of the determinant-root reconstruction on its own, or +inf when
/// it throws.
std::vector<double> factor_residuals(std::span<const GateMatrix4> gates, const Tolerance& tol);
/// Two-qubit kinds only; item i uses derive_seed(base_seed, i).
std::vector<GateMatrix4> generate_two_qubit(RandomKind kind, std::uint64_t base_seed,
                                            std::size_t count, const Tolerance& tol);
std::vector<CanonicalSingleQubit> generate_canonical(std::uint64_t base_seed, std::size_t count);

/// Single-threaded references for the kernels above.
namespace serial {
std::vector<double> canonical_roundtrip_errors(std::span<const CanonicalSingleQubit> params,
                                               const Tolerance& tol);
std::vector<ScreenOutcome> screen(std::span<const GateMatrix4> gates, const Tolerance& tol);
std::vector<double> factor_residuals(std::span<const GateMatrix4> gates, const Tolerance& tol);
std::vector<GateMatrix4> generate_two_qubit(RandomKind kind, std::uint64_t base_seed,
                                            std::size_t count, const Tolerance& tol);
}  // namespace serial

/// Shared per-item work.
namespace detail {
double canonical_roundtrip_error(const CanonicalSingleQubit& p, const Tolerance& tol);
ScreenOutcome screen_one(const GateMatrix4& g, const Tolerance& tol);
double factor_residual(const GateMatrix4& g, const Tolerance& tol);
GateMatrix4 generate_one(RandomKind kind, std::uint64_t seed, const Tolerance& tol);
}  // namespace detail

}  // namespace gatesep

#endif  // GATESEP_BATCH_HPP
