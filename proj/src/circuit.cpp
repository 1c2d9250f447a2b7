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

#include "gatesep/circuit.hpp"

#include <algorithm>
#include <string>

#include "gatesep/errors.hpp"

namespace gatesep {

GateInstance GateInstance::single(std::string label, std::size_t line, const GateMatrix2& matrix) {
  return GateInstance(std::move(label), {line, line}, matrix);
}

GateInstance GateInstance::two(std::string label, std::size_t first, std::size_t second,
                               const GateMatrix4& matrix) {
  if (first == second) {
    throw LineIndexError("gate '" + label + "' uses line " + std::to_string(first + 1) + " twice");
  }
  return GateInstance(std::move(label), {first, second}, matrix);
}

bool GateInstance::touches(std::size_t line) const {
  const auto ls = lines();
  return std::find(ls.begin(), ls.end(), line) != ls.end();
}

bool GateInstance::shares_line_with(const GateInstance& other) const {
  for (std::size_t l : lines())
    if (other.touches(l)) return true;
  return false;
}

Circuit::Circuit(std::size_t num_lines) : num_lines_(num_lines) {
  if (num_lines == 0) throw LineIndexError("a circuit needs at least one line");
}

void Circuit::append(GateInstance gate) {
  for (std::size_t l : gate.lines()) {
    if (l >= num_lines_) {
      throw LineIndexError("gate '" + gate.label() + "' uses line " + std::to_string(l + 1) +
                           " but the circuit has " + std::to_string(num_lines_));
    }
  }
  gates_.push_back(std::move(gate));
}

CostMetrics metrics(const Circuit& c) {
  CostMetrics m;
  m.gate_count = c.gates().size();

  std::vector<bool> used(c.num_lines(), false), entangled(c.num_lines(), false);
  std::vector<std::size_t> level(c.num_lines(), 0);
  for (const auto& g : c.gates()) {
    std::size_t start = 0;
    for (std::size_t l : g.lines()) {
      used[l] = true;
      if (g.arity() == 2) entangled[l] = true;
      start = std::max(start, level[l]);
    }
    for (std::size_t l : g.lines()) level[l] = start + 1;
    m.depth = std::max(m.depth, start + 1);
  }
  for (const auto& g : c.gates()) {
    if (g.arity() == 2 || !entangled[g.lines()[0]]) ++m.quantum_cost;
  }
  m.width = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
  return m;
}

namespace {

// Left-multiply every column of `u` (dim x dim, row-major) by the gate.
void apply_gate(std::vector<Complex>& u, std::size_t num_lines, const GateInstance& g) {
  const std::size_t dim = std::size_t{1} << num_lines;
  auto bit = [&](std::size_t line) { return std::size_t{1} << (num_lines - 1 - line); };

  if (g.arity() == 1) {
    const std::size_t mask = bit(g.lines()[0]);
    const auto& m = g.matrix2();
    for (std::size_t col = 0; col < dim; ++col) {
      for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        Complex& x0 = u[base * dim + col];
        Complex& x1 = u[(base | mask) * dim + col];
        const Complex y0 = m(0, 0) * x0 + m(0, 1) * x1;
        const Complex y1 = m(1, 0) * x0 + m(1, 1) * x1;
        x0 = y0;
        x1 = y1;
      }
    }
    return;
  }

  const std::size_t hi = bit(g.lines()[0]);
  const std::size_t lo = bit(g.lines()[1]);
  const auto& m = g.matrix4();
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t base = 0; base < dim; ++base) {
      if ((base & hi) || (base & lo)) continue;
      const std::array<std::size_t, 4> rows{base, base | lo, base | hi, base | hi | lo};
      std::array<Complex, 4> x{};
      for (std::size_t q = 0; q < 4; ++q) x[q] = u[rows[q] * dim + col];
      for (std::size_t r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (std::size_t q = 0; q < 4; ++q) acc += m(r, q) * x[q];
        u[rows[r] * dim + col] = acc;
      }
    }
  }
}

}  // namespace

DenseMatrix circuit_unitary(const Circuit& c) {
  if (c.num_lines() > kMaxVerifiedLines) {
    throw TooManyLines("circuit_unitary supports at most " + std::to_string(kMaxVerifiedLines) +
                       " lines, got " + std::to_string(c.num_lines()));
  }
  const std::size_t dim = std::size_t{1} << c.num_lines();
  std::vector<Complex> u(dim * dim);
  for (std::size_t q = 0; q < dim; ++q) u[q * dim + q] = 1.0;
  for (const auto& g : c.gates()) apply_gate(u, c.num_lines(), g);
  const Complex phase = std::polar(1.0, c.global_phase());
  for (auto& z : u) z *= phase;
  return DenseMatrix(dim, std::move(u));
}

}  // namespace gatesep
