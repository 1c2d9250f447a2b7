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

#ifndef GATESEP_TWO_QUBIT_GATES_HPP
#define GATESEP_TWO_QUBIT_GATES_HPP

#include "gatesep/matrix.hpp"

namespace gatesep {

GateMatrix4 cnot();

/// diag-block [[I, 0], [0, u]]: the first qubit controls u on the second.
GateMatrix4 controlled(const GateMatrix2& u);

/// Polarization-dependent beam splitter over (polarization) (x) (spatial
/// mode), reflection carrying a pi/2 phase:
///
///   [[t_aH, i r_bH, 0,    0   ],
///    [i r_aH, t_bH, 0,    0   ],
///    [0,    0,    t_aV, i r_bV],
///    [0,    0,    i r_aV, t_bV]]
///
/// with r = sqrt(1 - t^2) for each port, which makes each block unitary
/// when the two ports share a transmission coefficient. Requires
/// 0 <= t <= 1 (std::invalid_argument otherwise).
GateMatrix4 pdbs(double t_ah, double t_bh, double t_av, double t_bv);

/// Symmetric ports: pdbs(t_h, t_h, t_v, t_v).
GateMatrix4 pdbs(double t_h, double t_v);

/// Polarization-independent splitter: identity on polarization,
/// [[t, i r], [i r, t]] on the spatial modes. r defaults to sqrt(1 - t^2).
GateMatrix4 pidbs(double t);
GateMatrix4 pidbs(double t, double r);

}  // namespace gatesep

#endif  // GATESEP_TWO_QUBIT_GATES_HPP
