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

#ifndef GATESEP_CIRCUIT_HPP
#define GATESEP_CIRCUIT_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gatesep/matrix.hpp"

namespace gatesep {

/// One gate placed on one or two qubit lines (0-based). For two-qubit gates
/// the first line carries the most significant factor of the 4x4 matrix.
class GateInstance {
 public:
  static GateInstance single(std::string label, std::size_t line, const GateMatrix2& matrix);
  static GateInstance two(std::string label, std::size_t first, std::size_t second,
                          const GateMatrix4& matrix);

  std::size_t arity() const { return std::holds_alternative<GateMatrix2>(matrix_) ? 1 : 2; }
  std::span<const std::size_t> lines() const { return {lines_.data(), arity()}; }
  bool touches(std::size_t line) const;
  bool shares_line_with(const GateInstance& other) const;

  const GateMatrix2& matrix2() const { return std::get<GateMatrix2>(matrix_); }
  const GateMatrix4& matrix4() const { return std::get<GateMatrix4>(matrix_); }
  const std::string& label() const { return label_; }

 private:
  GateInstance(std::string label, std::array<std::size_t, 2> lines,
               std::variant<GateMatrix2, GateMatrix4> matrix)
      : label_(std::move(label)), lines_(lines), matrix_(std::move(matrix)) {}

  std::string label_;
  std::array<std::size_t, 2> lines_{};
  std::variant<GateMatrix2, GateMatrix4> matrix_;
};

/// Ordered gate list over `num_lines` qubit lines, plus the global phase
/// collected by passes that drop scalar multiples of the identity.
class Circuit {
 public:
  explicit Circuit(std::size_t num_lines);

  /// Throws LineIndexError for out-of-range or repeated lines.
  void append(GateInstance gate);

  std::size_t num_lines() const { return num_lines_; }
  const std::vector<GateInstance>& gates() const { return gates_; }
  double global_phase() const { return global_phase_; }
  void add_global_phase(double phi) { global_phase_ = wrap_angle(global_phase_ + phi); }

 private:
  std::size_t num_lines_;
  std::vector<GateInstance> gates_;
  double global_phase_ = 0.0;
};

struct CostMetrics {
  std::size_t gate_count = 0;
  /// Two-qubit gates plus single-qubit gates on lines no two-qubit gate
  /// touches (those cannot be absorbed).
  std::size_t quantum_cost = 0;
  std::size_t width = 0;  ///< lines touched by at least one gate
  std::size_t depth = 0;  ///< longest dependency chain

  friend bool operator==(const CostMetrics&, const CostMetrics&) = default;

  /// Every field <= the corresponding field of `other`.
  bool dominated_by(const CostMetrics& other) const {
    return gate_count <= other.gate_count && quantum_cost <= other.quantum_cost &&
           width <= other.width && depth <= other.depth;
  }
};

CostMetrics metrics(const Circuit& c);

inline constexpr std::size_t kMaxVerifiedLines = 4;

/// G_n ... G_1 with each gate embedded by identities on the untouched
/// lines, times e^{i global_phase}. Line 0 is the most significant bit of
/// the basis index. Throws TooManyLines above kMaxVerifiedLines.
DenseMatrix circuit_unitary(const Circuit& c);

}  // namespace gatesep

#endif  // GATESEP_CIRCUIT_HPP
