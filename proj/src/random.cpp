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

#include "gatesep/random.hpp"

#include <string>

#include "gatesep/errors.hpp"
#include "gatesep/separability.hpp"
#include "gatesep/two_qubit_gates.hpp"

namespace gatesep {

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::size_t Rng::index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RandomKind parse_random_kind(std::string_view name) {
  if (name == "single") return RandomKind::Single;
  if (name == "separable") return RandomKind::Separable;
  if (name == "genuine") return RandomKind::Genuine;
  throw UsageError("unknown random kind '" + std::string(name) + "'");
}

std::string_view to_string(RandomKind kind) {
  switch (kind) {
    case RandomKind::Single: return "single";
    case RandomKind::Separable: return "separable";
    case RandomKind::Genuine: return "genuine";
  }
  return "?";
}

CanonicalSingleQubit random_canonical(Rng& rng) {
  CanonicalSingleQubit p;
  p.theta = rng.uniform(0.0, kPi / 2);
  p.phi0 = rng.uniform(-kPi, kPi);
  p.phi1 = rng.uniform(-kPi, kPi);
  p.phi2 = rng.uniform(-kPi, kPi);
  return p;
}

GateMatrix2 random_single(Rng& rng) { return realize(random_canonical(rng)); }

GateMatrix4 random_separable(Rng& rng) {
  const GateMatrix2 u1 = random_single(rng);
  const GateMatrix2 u2 = random_single(rng);
  const double phase = rng.uniform(-kPi, kPi);
  return std::polar(1.0, phase) * tensor2x2(u1, u2);
}

GateMatrix4 random_genuine(Rng& rng, const Tolerance& tol) {
  for (;;) {
    const GateMatrix4 left = tensor2x2(random_single(rng), random_single(rng));
    const GateMatrix4 right = tensor2x2(random_single(rng), random_single(rng));
    const GateMatrix4 g = left * cnot() * right;
    if (!separability_oracle(g, tol).factors) return g;
  }
}

AnyGateMatrix gen_random(RandomKind kind, std::uint64_t seed, const Tolerance& tol) {
  Rng rng(seed);
  switch (kind) {
    case RandomKind::Single: return random_single(rng);
    case RandomKind::Separable: return random_separable(rng);
    case RandomKind::Genuine: return random_genuine(rng, tol);
  }
  throw UsageError("unknown random kind");
}

Circuit random_circuit(Rng& rng, std::size_t num_lines, std::size_t max_gates,
                       const Tolerance& tol) {
  if (num_lines < 2) throw LineIndexError("random circuits need at least two lines");
  Circuit c(num_lines);
  const std::size_t count = 1 + rng.index(max_gates);
  for (std::size_t q = 0; q < count; ++q) {
    const std::string label = "g" + std::to_string(q + 1);
    const std::size_t choice = rng.index(4);
    if (choice == 3 && !c.gates().empty()) {
      const GateInstance& prior = c.gates()[rng.index(c.gates().size())];
      const Complex phase = std::polar(1.0, rng.uniform(-kPi, kPi));
      if (prior.arity() == 1) {
        c.append(GateInstance::single(label, prior.lines()[0], phase * adjoint(prior.matrix2())));
      } else {
        c.append(GateInstance::two(label, prior.lines()[0], prior.lines()[1],
                                   phase * adjoint(prior.matrix4())));
      }
      continue;
    }
    if (choice == 0 || choice == 3) {
      c.append(GateInstance::single(label, rng.index(num_lines), random_single(rng)));
      continue;
    }
    const std::size_t first = rng.index(num_lines);
    std::size_t second = rng.index(num_lines - 1);
    if (second >= first) ++second;
    const GateMatrix4 m = choice == 1 ? random_separable(rng) : random_genuine(rng, tol);
    c.append(GateInstance::two(label, first, second, m));
  }
  return c;
}

}  // namespace gatesep
