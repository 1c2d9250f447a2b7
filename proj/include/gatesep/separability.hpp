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

#ifndef GATESEP_SEPARABILITY_HPP
#define GATESEP_SEPARABILITY_HPP

#include <array>
#include <optional>
#include <string_view>

#include "gatesep/matrix.hpp"

namespace gatesep {

// Entry names of a 4x4 matrix, row-major:
//
//   [a b c d]
//   [e f g h]
//   [i j k l]
//   [m n o p]
namespace entry {
inline constexpr std::size_t a = 0, b = 1, c = 2, d = 3;
inline constexpr std::size_t e = 4, f = 5, g = 6, h = 7;
inline constexpr std::size_t i = 8, j = 9, k = 10, l = 11;
inline constexpr std::size_t m = 12, n = 13, o = 14, p = 15;
}  // namespace entry

/// Conjugate pairings used to fix the global phase, in preference order
/// p = a*, m = d*, f = k*, g = j*, o = -b*, n = -c*, e = -l*, h = -i*.
/// Each is one equality from the test battery. `None` means no pairing had
/// both entries above eps_match, which no product gate can produce.
enum class Pairing { AP, DM, FK, GJ, BO, CN, EL, HI, None };

std::string_view to_string(Pairing pairing);

/// A 4x4 gate written as e^{i global_phase} * entries.
struct PhaseNormalized4 {
  double global_phase = 0.0;
  GateMatrix4 entries;
  Pairing pairing = Pairing::None;
};

struct CheckResult {
  bool passed = false;
  double residual = 0.0;
};

struct Condition1 {
  bool diagonal = false;
  bool antidiagonal = false;
  double diagonal_spread = 0.0;      ///< max - min of |a11|..|a44|
  double antidiagonal_spread = 0.0;  ///< max - min of |a41|, |a32|, |a23|, |a14|
};

/// Free phases of Tests 2-5: f = a e^{i phi_a}, e = b e^{i phi_b},
/// h = c e^{i phi_c}, g = d e^{i phi_d}. Undefined when the reference entry
/// has modulus <= eps_match.
struct FreePhases {
  std::optional<double> phi_a, phi_b, phi_c, phi_d;
};

struct TestBattery {
  std::array<CheckResult, 5> tests;
  FreePhases free_phases;

  bool all_passed() const {
    for (const auto& t : tests)
      if (!t.passed) return false;
    return true;
  }
};

struct DetConditions {
  std::array<CheckResult, 4> conditions;
  /// Phase w (as an angle) applied to the left-hand determinants before
  /// comparing: w * lhs_k = conj(rhs_k).
  double gauge_phase = 0.0;

  bool all_passed() const {
    for (const auto& c : conditions)
      if (!c.passed) return false;
    return true;
  }
};

struct OracleResult {
  /// Frobenius norm of the realigned matrix minus its best rank-1 part.
  double residual = 0.0;
  /// Candidate factors, present when residual <= eps_match. Their tensor
  /// product reproduces the input up to a global phase.
  std::optional<std::array<GateMatrix2, 2>> factors;
};

/// Picks the pairing to normalize by: among the eight pairings of the test
/// battery whose entries both exceed eps_match, the first (in test order)
/// whose smaller modulus is at least half of the best available. e^{2i phi}
/// is the unit phase of the pairing's product (with the test's sign), and
/// phi is its halved principal angle. Throws NotUnitary.
PhaseNormalized4 extract_global_phase(const GateMatrix4& a, const Tolerance& tol);

/// Modulus screen on the raw entries: equal diagonal moduli, equal
/// anti-diagonal moduli.
Condition1 check_condition1(const GateMatrix4& a, const Tolerance& tol);

/// Tests 1-5 on a phase-normalized matrix.
///   1: p = a*, o = -b*, n = -c*, m = d*
///   2: f = k*, |f| = |a|      3: e = -l*, |e| = |b|
///   4: h = -i*, |h| = |c|     5: g = j*, |g| = |d|
TestBattery run_tests(const PhaseNormalized4& n, const Tolerance& tol);

/// Block-determinant conjugacy conditions
///   C1: |a b; e f| = |k l; o p|*     C2: |c d; g h| = |i j; m n|*
///   C3: |a c; i k| = |f h; n p|*     C4: |b d; j l| = |e g; m o|*
/// compared modulo the leftover global-phase gauge (see DetConditions).
DetConditions check_det_conditions(const PhaseNormalized4& n, const Tolerance& tol);

/// Realignment R[(r1,c1),(r2,c2)] = A[(r1,r2),(c1,c2)].
GateMatrix4 realign(const GateMatrix4& a);

/// Independent separability check: best rank-1 approximation of the
/// realigned matrix by power iteration on R^dagger R. Throws NotUnitary.
OracleResult separability_oracle(const GateMatrix4& a, const Tolerance& tol);

}  // namespace gatesep

#endif  // GATESEP_SEPARABILITY_HPP
