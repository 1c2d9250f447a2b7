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

#include "gatesep/two_qubit_gates.hpp"

#include <stdexcept>

namespace gatesep {
namespace {

double reflection(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("transmission must lie in [0, 1]");
  return std::sqrt(1.0 - t * t);
}

}  // namespace

GateMatrix4 cnot() {
  return GateMatrix4({1, 0, 0, 0,  //
                      0, 1, 0, 0,  //
                      0, 0, 0, 1,  //
                      0, 0, 1, 0});
}

GateMatrix4 controlled(const GateMatrix2& u) {
  return GateMatrix4({1, 0, 0, 0,                //
                      0, 1, 0, 0,                //
                      0, 0, u(0, 0), u(0, 1),    //
                      0, 0, u(1, 0), u(1, 1)});
}

GateMatrix4 pdbs(double t_ah, double t_bh, double t_av, double t_bv) {
  const Complex i(0.0, 1.0);
  const double r_ah = reflection(t_ah), r_bh = reflection(t_bh);
  const double r_av = reflection(t_av), r_bv = reflection(t_bv);
  return GateMatrix4({t_ah, i * r_bh, 0, 0,  //
                      i * r_ah, t_bh, 0, 0,  //
                      0, 0, t_av, i * r_bv,  //
                      0, 0, i * r_av, t_bv});
}

GateMatrix4 pdbs(double t_h, double t_v) { return pdbs(t_h, t_h, t_v, t_v); }

GateMatrix4 pidbs(double t) { return pidbs(t, reflection(t)); }

GateMatrix4 pidbs(double t, double r) {
  const Complex i(0.0, 1.0);
  return GateMatrix4({t, i * r, 0, 0,  //
                      i * r, t, 0, 0,  //
                      0, 0, t, i * r,  //
                      0, 0, i * r, t});
}

}  // namespace gatesep
