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

#ifndef GATESEP_SINGLE_QUBIT_HPP
#define GATESEP_SINGLE_QUBIT_HPP

#include <array>
#include <optional>
#include <string_view>

#include "gatesep/matrix.hpp"

namespace gatesep {

/// Canonical parametrization of a single-qubit unitary:
///
///   U = e^{i phi0} [[ cos(theta) e^{ i phi1},  sin(theta) e^{ i phi2}],
///                   [-sin(theta) e^{-i phi2},  cos(theta) e^{-i phi1}]]
///
/// theta in [0, pi/2]; phi0, phi1, phi2 in (-pi, pi]. The negative sign sits
/// on entry (2,1).
struct CanonicalSingleQubit {
  double theta = 0.0;
  double phi0 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

/// Polar form of the four entries: |a| = |d| = cos(theta),
/// |b| = |c| = sin(theta), phases phi11, phi12, phi21, phi22. The phase of a
/// zero entry is reported as 0.
struct PolarForm {
  double theta = 0.0;
  double phi11 = 0.0;
  double phi12 = 0.0;
  double phi21 = 0.0;
  double phi22 = 0.0;
};

/// Self-inverse gate
///
///   U_H = sign * [[ cos(theta),               i sin(theta) e^{i phi2}],
///                 [-i sin(theta) e^{-i phi2}, -cos(theta)            ]]
///
/// `scalar` marks the two Hermitian unitaries outside that traceless family,
/// U = sign * I; theta and phi2 are 0 for them.
struct HermitianParams {
  double theta = 0.0;
  double phi2 = 0.0;
  int sign = 1;
  bool scalar = false;
};

GateMatrix2 realize(const CanonicalSingleQubit& p);

/// Inverse of `realize` up to the degeneracies at theta in {0, pi/2}: the
/// returned parameters always realize U within tol.eps_roundtrip for exactly
/// unitary input. Throws NotUnitary.
CanonicalSingleQubit canonicalize(const GateMatrix2& u, const Tolerance& tol);

/// Raw polar decomposition of the entries. Throws NotUnitary.
PolarForm polar_form(const GateMatrix2& u, const Tolerance& tol);

/// The four structures obtained by putting the mandatory negative sign on
/// entry (1,1), (1,2), (2,1), (2,2) in that order. Index 2 equals realize(p).
std::array<GateMatrix2, 4> equivalent_sign_forms(const CanonicalSingleQubit& p);

/// Returns the self-inverse parameters when max|U - U^dagger| <= eps_match,
/// std::nullopt otherwise. Sign convention: +1 when Re U(1,1) > eps_match,
/// -1 when below -eps_match, otherwise decided by the sign of Im U(1,2).
/// Throws NotUnitary.
std::optional<HermitianParams> classify_hermitian(const GateMatrix2& u, const Tolerance& tol);

GateMatrix2 realize_hermitian(const HermitianParams& h);

enum class NamedGate { I, X, iY, Z, H, P };

/// Standard matrices. `iY` follows the self-inverse table convention,
/// [[0, i], [-i, 0]] = U_H(pi/2, 0). `xi` is only read for P = diag(1, e^{i xi}).
GateMatrix2 named_gate(NamedGate name, double xi = 0.0);

/// Parses "I", "X", "iY", "Z", "H" or "P(<xi>)". Throws UnknownGateName.
GateMatrix2 named_gate(std::string_view name);

}  // namespace gatesep

#endif  // GATESEP_SINGLE_QUBIT_HPP
