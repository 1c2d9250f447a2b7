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

#include <limits>

#include "gatesep/batch.hpp"
#include "gatesep/errors.hpp"
#include "gatesep/factorize.hpp"

namespace gatesep {
namespace detail {

double canonical_roundtrip_error(const CanonicalSingleQubit& p, const Tolerance& tol) {
  const GateMatrix2 u = realize(p);
  return max_abs_diff(realize(canonicalize(u, tol)), u);
}

ScreenOutcome screen_one(const GateMatrix4& g, const Tolerance& tol) {
  ScreenOutcome out;
  try {
    const OracleResult oracle = separability_oracle(g, tol);
    out.oracle_residual = oracle.residual;
    out.oracle_separable = oracle.factors.has_value();
    const SeparabilityReport r = analyze(g, tol);
    out.verdict = r.verdict;
    out.reconstruction_gap = r.reconstruction_gap;
    if (r.factors) out.factor_residual = r.factors->residual;
  } catch (const InternalInconsistency& e) {
    out.inconsistency = true;
    out.error = e.what();
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

double factor_residual(const GateMatrix4& g, const Tolerance& tol) {
  try {
    return reconstruct(extract_global_phase(g, tol), tol).residual;
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

GateMatrix4 generate_one(RandomKind kind, std::uint64_t seed, const Tolerance& tol) {
  if (kind == RandomKind::Single) throw UsageError("two-qubit batch cannot generate 'single'");
  return std::get<GateMatrix4>(gen_random(kind, seed, tol));
}

}  // namespace detail

namespace serial {

std::vector<double> canonical_roundtrip_errors(std::span<const CanonicalSingleQubit> params,
                                               const Tolerance& tol) {
  std::vector<double> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(detail::canonical_roundtrip_error(p, tol));
  return out;
}

std::vector<ScreenOutcome> screen(std::span<const GateMatrix4> gates, const Tolerance& tol) {
  std::vector<ScreenOutcome> out;
  out.reserve(gates.size());
  for (const auto& g : gates) out.push_back(detail::screen_one(g, tol));
  return out;
}

std::vector<double> factor_residuals(std::span<const GateMatrix4> gates, const Tolerance& tol) {
  std::vector<double> out;
  out.reserve(gates.size());
  for (const auto& g : gates) out.push_back(detail::factor_residual(g, tol));
  return out;
}

std::vector<GateMatrix4> generate_two_qubit(RandomKind kind, std::uint64_t base_seed,
                                            std::size_t count, const Tolerance& tol) {
  std::vector<GateMatrix4> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(detail::generate_one(kind, derive_seed(base_seed, i), tol));
  return out;
}

}  // namespace serial
}  // namespace gatesep
