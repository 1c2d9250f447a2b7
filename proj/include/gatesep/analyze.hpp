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

#ifndef GATESEP_ANALYZE_HPP
#define GATESEP_ANALYZE_HPP

#include <optional>
#include <string_view>

#include "gatesep/factorize.hpp"
#include "gatesep/separability.hpp"

namespace gatesep {

enum class Verdict { Separable, GenuineTwoQubit };

std::string_view to_string(Verdict v);

/// Everything `analyze` looked at, so a verdict can be audited after the
/// fact.
struct SeparabilityReport {
  Condition1 condition1;
  PhaseNormalized4 normalized;
  TestBattery tests;
  DetConditions det_conditions;
  double oracle_residual = 0.0;
  Verdict verdict = Verdict::GenuineTwoQubit;
  /// Present iff verdict == Separable.
  std::optional<FactorPair> factors;
  /// Condition 1 and Tests 1-5 passed but no factorization reproduced the
  /// gate. Kept as data on whether the tests alone are sufficient.
  bool reconstruction_gap = false;

  bool condition1_passed() const { return condition1.diagonal && condition1.antidiagonal; }
};

/// Decides whether a 4x4 unitary is e^{i phi} U1 (x) U2.
///
/// Condition 1 screens first; Tests 1-5 and C1-C4 are evaluated on the
/// phase-normalized matrix regardless so the report is complete. The verdict
/// is Separable only when Condition 1 and all five tests pass *and* the
/// factors rebuilt from the block determinants reproduce the input within
/// eps_match. The realignment oracle always runs; if its verdict
/// (residual <= eps_match) differs, InternalInconsistency is thrown.
///
/// Throws NotUnitary, InternalInconsistency.
SeparabilityReport analyze(const GateMatrix4& a, const Tolerance& tol);

}  // namespace gatesep

#endif  // GATESEP_ANALYZE_HPP
