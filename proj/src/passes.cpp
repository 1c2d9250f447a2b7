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

#include "gatesep/passes.hpp"

#include <optional>
#include <utility>

#include "gatesep/analyze.hpp"
#include "gatesep/errors.hpp"

namespace gatesep {
namespace {

using GateList = std::vector<GateInstance>;

Circuit rebuild(std::size_t num_lines, double phase, const GateList& gates) {
  Circuit out(num_lines);
  out.add_global_phase(phase);
  for (const auto& g : gates) out.append(g);
  return out;
}

std::optional<std::size_t> next_sharing(const GateList& gates, std::size_t i) {
  for (std::size_t j = i + 1; j < gates.size(); ++j)
    if (gates[j].shares_line_with(gates[i])) return j;
  return std::nullopt;
}

std::optional<std::size_t> neighbour_on_line(const GateList& gates, std::size_t i,
                                             std::size_t line, bool forward) {
  if (forward) {
    for (std::size_t j = i + 1; j < gates.size(); ++j)
      if (gates[j].touches(line)) return j;
  } else {
    for (std::size_t j = i; j-- > 0;)
      if (gates[j].touches(line)) return j;
  }
  return std::nullopt;
}

std::optional<std::pair<GateInstance, GateInstance>> split(const GateInstance& g,
                                                           const Tolerance& tol) {
  if (g.arity() != 2) return std::nullopt;
  try {
    const SeparabilityReport report = analyze(g.matrix4(), tol);
    if (report.verdict != Verdict::Separable) return std::nullopt;
    const FactorPair& fp = *report.factors;
    const GateMatrix2 first = std::polar(1.0, fp.global_phase) * fp.u1;
    return std::pair{GateInstance::single(g.label() + "_1", g.lines()[0], first),
                     GateInstance::single(g.label() + "_2", g.lines()[1], fp.u2)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

Circuit decompose_at(const Circuit& c, std::size_t index,
                     const std::pair<GateInstance, GateInstance>& factors) {
  GateList gates;
  gates.reserve(c.gates().size() + 1);
  for (std::size_t q = 0; q < c.gates().size(); ++q) {
    if (q == index) {
      gates.push_back(factors.first);
      gates.push_back(factors.second);
    } else {
      gates.push_back(c.gates()[q]);
    }
  }
  return rebuild(c.num_lines(), c.global_phase(), gates);
}

// Scalar lambda with later * earlier = lambda I, if any.
std::optional<Complex> cancellation_scalar(const GateInstance& earlier, const GateInstance& later,
                                           const Tolerance& tol) {
  if (earlier.arity() != later.arity()) return std::nullopt;
  if (earlier.arity() == 1) {
    if (earlier.lines()[0] != later.lines()[0]) return std::nullopt;
    const GateMatrix2 prod = later.matrix2() * earlier.matrix2();
    const Complex lambda = 0.5 * (prod(0, 0) + prod(1, 1));
    if (max_abs_diff(prod, lambda * GateMatrix2::identity()) <= tol.eps_match) return lambda;
    return std::nullopt;
  }
  GateMatrix4 later_m = later.matrix4();
  if (later.lines()[0] == earlier.lines()[0] && later.lines()[1] == earlier.lines()[1]) {
    // same orientation
  } else if (later.lines()[0] == earlier.lines()[1] && later.lines()[1] == earlier.lines()[0]) {
    later_m = swap_qubits(later_m);
  } else {
    return std::nullopt;
  }
  const GateMatrix4 prod = later_m * earlier.matrix4();
  const Complex lambda = 0.25 * (prod(0, 0) + prod(1, 1) + prod(2, 2) + prod(3, 3));
  if (max_abs_diff(prod, lambda * GateMatrix4::identity()) <= tol.eps_match) return lambda;
  return std::nullopt;
}

struct PairHit {
  std::size_t earlier, later;
  Complex lambda;
};

std::vector<PairHit> cancellable_pairs(const Circuit& c, const Tolerance& tol) {
  std::vector<PairHit> hits;
  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto j = next_sharing(gates, i);
    if (!j) continue;
    if (const auto lambda = cancellation_scalar(gates[i], gates[*j], tol)) {
      hits.push_back({i, *j, *lambda});
    }
  }
  return hits;
}

Circuit remove_pair(const Circuit& c, const PairHit& hit) {
  GateList gates;
  for (std::size_t q = 0; q < c.gates().size(); ++q)
    if (q != hit.earlier && q != hit.later) gates.push_back(c.gates()[q]);
  return rebuild(c.num_lines(), c.global_phase() + std::arg(hit.lambda), gates);
}

GateMatrix4 embed(const GateMatrix2& g, bool on_first) {
  const GateMatrix2 id = GateMatrix2::identity();
  return on_first ? tensor2x2(g, id) : tensor2x2(id, g);
}

// Identifies a circuit up to the rewrites used here: decompositions reduce
// the number of two-qubit gates, cancellations the number of gates.
std::pair<std::size_t, std::size_t> signature(const Circuit& c) {
  std::size_t two = 0;
  for (const auto& g : c.gates()) two += g.arity() == 2;
  return {two, c.gates().size()};
}

Circuit decompose_and_cancel(const Circuit& c, const Tolerance& tol) {
  Circuit current = c;
  for (;;) {
    Circuit next = pass_cancel_inverses(pass_decompose(current, tol), tol);
    if (signature(next) == signature(current)) return current;
    current = std::move(next);
  }
}

}  // namespace

Circuit pass_decompose(const Circuit& c, const Tolerance& tol) {
  GateList gates;
  gates.reserve(c.gates().size());
  for (const auto& g : c.gates()) {
    if (auto factors = split(g, tol)) {
      gates.push_back(std::move(factors->first));
      gates.push_back(std::move(factors->second));
    } else {
      gates.push_back(g);
    }
  }
  return rebuild(c.num_lines(), c.global_phase(), gates);
}

Circuit pass_cancel_inverses(const Circuit& c, const Tolerance& tol) {
  Circuit current = c;
  for (;;) {
    const auto hits = cancellable_pairs(current, tol);
    if (hits.empty()) return current;
    current = remove_pair(current, hits.front());
  }
}

Circuit pass_absorb(const Circuit& c, const Tolerance& /*tol*/) {
  GateList gates = c.gates();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (gates[i].arity() != 1) continue;
      const std::size_t line = gates[i].lines()[0];
      const GateMatrix2& g = gates[i].matrix2();

      std::optional<std::size_t> host;
      bool after_host = false;
      if (const auto prev = neighbour_on_line(gates, i, line, false);
          prev && gates[*prev].arity() == 2) {
        host = prev;
        after_host = true;
      } else if (const auto next = neighbour_on_line(gates, i, line, true);
                 next && gates[*next].arity() == 2) {
        host = next;
      }
      if (!host) continue;

      const GateInstance& h = gates[*host];
      const GateMatrix4 e = embed(g, h.lines()[0] == line);
      const GateMatrix4 merged = after_host ? e * h.matrix4() : h.matrix4() * e;
      gates[*host] = GateInstance::two(h.label() + "'", h.lines()[0], h.lines()[1], merged);
      gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  return rebuild(c.num_lines(), c.global_phase(), gates);
}

OptimizeResult optimize(const Circuit& c, const Tolerance& tol) {
  Circuit current = c;
  CostMetrics current_metrics = metrics(c);

  auto accept = [&](Circuit candidate) {
    if (signature(candidate) == signature(current)) return false;
    const CostMetrics m = metrics(candidate);
    if (!m.dominated_by(current_metrics)) return false;
    current = std::move(candidate);
    current_metrics = m;
    return true;
  };

  for (bool progressed = true; progressed;) {
    progressed = accept(decompose_and_cancel(current, tol));
    if (progressed) continue;

    for (std::size_t k = 0; k < current.gates().size() && !progressed; ++k) {
      if (auto factors = split(current.gates()[k], tol)) {
        progressed = accept(pass_cancel_inverses(decompose_at(current, k, *factors), tol));
      }
    }
    if (progressed) continue;

    progressed = accept(pass_cancel_inverses(current, tol));
    if (progressed) continue;

    for (const auto& hit : cancellable_pairs(current, tol)) {
      if ((progressed = accept(remove_pair(current, hit)))) break;
    }
  }

  CostMetrics after = current_metrics;
  after.quantum_cost = metrics(pass_absorb(current, tol)).quantum_cost;
  return {std::move(current), metrics(c), after};
}

}  // namespace gatesep
