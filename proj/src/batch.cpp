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

#include "gatesep/batch.hpp"

#include <exception>

#include "gatesep/errors.hpp"

namespace gatesep {
namespace {

// Runs body(i) for i in [0, n) across threads. The first exception is
// rethrown after the loop; OpenMP regions must not be left by a throw.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(gatesep_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<double> canonical_roundtrip_errors(std::span<const CanonicalSingleQubit> params,
                                               const Tolerance& tol) {
  std::vector<double> out(params.size());
  parallel_for(params.size(),
               [&](std::size_t i) { out[i] = detail::canonical_roundtrip_error(params[i], tol); });
  return out;
}

std::vector<ScreenOutcome> screen(std::span<const GateMatrix4> gates, const Tolerance& tol) {
  std::vector<ScreenOutcome> out(gates.size());
  parallel_for(gates.size(), [&](std::size_t i) { out[i] = detail::screen_one(gates[i], tol); });
  return out;
}

std::vector<double> factor_residuals(std::span<const GateMatrix4> gates, const Tolerance& tol) {
  std::vector<double> out(gates.size());
  parallel_for(gates.size(), [&](std::size_t i) { out[i] = detail::factor_residual(gates[i], tol); });
  return out;
}

std::vector<GateMatrix4> generate_two_qubit(RandomKind kind, std::uint64_t base_seed,
                                            std::size_t count, const Tolerance& tol) {
  if (kind == RandomKind::Single) throw UsageError("two-qubit batch cannot generate 'single'");
  std::vector<GateMatrix4> out(count);
  parallel_for(count, [&](std::size_t i) {
    out[i] = detail::generate_one(kind, derive_seed(base_seed, i), tol);
  });
  return out;
}

std::vector<CanonicalSingleQubit> generate_canonical(std::uint64_t base_seed, std::size_t count) {
  std::vector<CanonicalSingleQubit> out(count);
  parallel_for(count, [&](std::size_t i) {
    Rng rng(derive_seed(base_seed, i));
    out[i] = random_canonical(rng);
  });
  return out;
}

}  // namespace gatesep
