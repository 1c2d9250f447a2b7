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

#include "gatesep/analyze.hpp"

#include <sstream>

#include "gatesep/errors.hpp"

namespace gatesep {

std::string_view to_string(Verdict v) {
  return v == Verdict::Separable ? "Separable" : "GenuineTwoQubit";
}

SeparabilityReport analyze(const GateMatrix4& a, const Tolerance& tol) {
  require_unitary(a, tol, "analyze");

  SeparabilityReport report;
  report.condition1 = check_condition1(a, tol);
  report.normalized = extract_global_phase(a, tol);
  report.tests = run_tests(report.normalized, tol);
  report.det_conditions = check_det_conditions(report.normalized, tol);
  report.oracle_residual = separability_oracle(a, tol).residual;

  if (report.condition1_passed() && report.tests.all_passed()) {
    try {
      report.factors = reconstruct(report.normalized, tol);
      report.verdict = Verdict::Separable;
    } catch (const ReconstructionFailed&) {
      report.reconstruction_gap = true;
    }
  }

  const bool oracle_separable = report.oracle_residual <= tol.eps_match;
  if (oracle_separable != (report.verdict == Verdict::Separable)) {
    std::ostringstream msg;
    msg << "analyze: test battery says " << to_string(report.verdict)
        << " but realignment residual is " << report.oracle_residual
        << " (eps_match " << tol.eps_match << ")";
    if (report.reconstruction_gap) msg << "; tests passed but reconstruction failed";
    throw InternalInconsistency(msg.str());
  }
  return report;
}

}  // namespace gatesep
