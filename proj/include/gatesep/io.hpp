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

#ifndef GATESEP_IO_HPP
#define GATESEP_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gatesep/analyze.hpp"
#include "gatesep/circuit.hpp"
#include "gatesep/factorize.hpp"
#include "gatesep/random.hpp"
#include "gatesep/single_qubit.hpp"

namespace gatesep {

using Json = nlohmann::ordered_json;

// Matrix documents: {"dim": 2|4, "entries": [[re, im], ...]}, row-major.
// Unknown keys are ignored. Reals are written in shortest round-trip form,
// so write-then-parse is bitwise exact.

/// Throws ParseError (with line/column or field context) and DimensionError.
/// Unitarity is not checked.
AnyGateMatrix parse_matrix_json(std::string_view text);
/// As above, plus IoError when the file cannot be read.
AnyGateMatrix parse_matrix_file(const std::filesystem::path& path);

Json matrix_to_json(const GateMatrix2& m);
Json matrix_to_json(const GateMatrix4& m);
Json matrix_to_json(const AnyGateMatrix& m);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Circuit text:
//   lines <n>
//   gate <label> <line> [<line2>] inline <re,im> ...
//   gate <label> <line> [<line2>] file <matrix.json>
// '#' starts a comment; line indices are 1-based; file paths are relative
// to the circuit file.

/// Throws ParseError, LineIndexError, DimensionError, IoError (referenced
/// matrix files) and NotUnitary.
Circuit parse_circuit(std::string_view text, const std::filesystem::path& base_dir,
                      const Tolerance& tol = {});
Circuit parse_circuit_file(const std::filesystem::path& path, const Tolerance& tol = {});
/// Every gate inline. The global phase is kept as a comment.
std::string circuit_to_text(const Circuit& c);

/// Shortest representation that parses back to the same double.
std::string format_real(double x);

Json to_json(const CanonicalSingleQubit& p);
Json to_json(const PolarForm& p);
/// {"hermitian": true, "theta", "phi2", "sign", "scalar"}, or
/// {"hermitian": false, "residual"} when `h` is empty.
Json hermitian_to_json(const std::optional<HermitianParams>& h, double hermiticity_residual);
Json to_json(const FactorPair& fp);
Json to_json(const SeparabilityReport& r);
Json to_json(const CostMetrics& m);

}  // namespace gatesep

#endif  // GATESEP_IO_HPP
