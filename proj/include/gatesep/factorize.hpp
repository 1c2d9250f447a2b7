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

#ifndef GATESEP_FACTORIZE_HPP
#define GATESEP_FACTORIZE_HPP

#include "gatesep/matrix.hpp"
#include "gatesep/separability.hpp"

namespace gatesep {

/// The eight 2x2 block determinants of a phase-normalized product gate
/// U1 (x) U2 with U1 ~ [[u1, u2], [-u2*, u1*]], U2 ~ [[v1, v2], [-v2*, v1*]].
struct BlockDeterminants {
  Complex u1sq;       ///< af - be
  Complex u2sq;       ///< ch - gd
  Complex u1sq_conj;  ///< kp - lo
  Complex u2sq_conj;  ///< in - jm
  Complex v1sq;       ///< ak - ci
  Complex v2sq;       ///< bl - jd
  Complex v1sq_conj;  ///< fp - hn
  Complex v2sq_conj;  ///< eo - gm
};

/// A reconstructed factorization A = e^{i global_phase} * (u1 (x) u2).
struct FactorPair {
  GateMatrix2 u1;
  GateMatrix2 u2;
  /// Half the determinant phase of u1: u1 = e^{i phase_split} * SU(2) matrix.
  double phase_split = 0.0;
  double global_phase = 0.0;
  /// max |A - e^{i global_phase} u1 (x) u2|
  double residual = 0.0;
  /// Sign pattern accepted by the square-root search (bit 0: relative sign of
  /// u2 in U1, bit 1: relative sign of v2 in U2, bit 2: overall sign of U2).
  int sign_pattern = 0;
  /// True when the determinant roots alone were too inaccurate and the
  /// factors were re-solved from the dominant block.
  bool refined = false;
};

BlockDeterminants block_determinants(const PhaseNormalized4& n);

/// Rebuilds U1 and U2 from square roots of the block determinants, resolves
/// the square-root signs by trying the eight admissible patterns, and
/// projects both factors to exact unitaries. Throws ReconstructionFailed
/// when no pattern reproduces the input within eps_match.
FactorPair reconstruct(const PhaseNormalized4& n, const Tolerance& tol);

/// (e^{i alpha} u1, e^{-i alpha} u2): same tensor product, same residual.
FactorPair phase_family(const FactorPair& fp, double alpha);

}  // namespace gatesep

#endif  // GATESEP_FACTORIZE_HPP
