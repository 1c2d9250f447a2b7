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

#include "gatesep/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gatesep/errors.hpp"

namespace gatesep {
namespace {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
  return buf.str();
}

double json_real(const Json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

template <std::size_t N>
Json square_to_json(const SquareMatrix<N>& m) {
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"dim", N}, {"entries", std::move(entries)}};
}

template <std::size_t N>
SquareMatrix<N> to_square(const std::vector<Complex>& values) {
  std::array<Complex, N * N> e{};
  std::copy(values.begin(), values.end(), e.begin());
  return SquareMatrix<N>(e);
}

AnyGateMatrix from_values(std::size_t dim, const std::vector<Complex>& values,
                          const std::string& where) {
  if (values.size() != dim * dim) {
    throw DimensionError(where + ": " + std::to_string(values.size()) + " entries for dim " +
                         std::to_string(dim));
  }
  if (dim == 2) return to_square<2>(values);
  if (dim == 4) return to_square<4>(values);
  throw DimensionError(where + ": dim must be 2 or 4, got " + std::to_string(dim));
}

double parse_real(std::string_view token, const std::string& where) {
  double x = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(where + ": bad number '" + std::string(token) + "'");
  }
  return x;
}

std::size_t parse_line_index(std::string_view token, std::size_t num_lines,
                             const std::string& where) {
  std::size_t v = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(where + ": bad line index '" + std::string(token) + "'");
  }
  if (v == 0 || v > num_lines) {
    throw LineIndexError(where + ": line " + std::to_string(v) + " outside 1.." +
                         std::to_string(num_lines));
  }
  return v - 1;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    std::size_t stop = s.find_first_of(" \t\r", start);
    if (stop == std::string_view::npos) stop = s.size();
    out.push_back(s.substr(start, stop - start));
    pos = stop;
  }
  return out;
}

Json optional_angle(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

Json check_to_json(const CheckResult& c) {
  return Json{{"passed", c.passed}, {"residual", c.residual}};
}

}  // namespace

AnyGateMatrix parse_matrix_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix JSON: top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
    throw ParseError("matrix JSON: field 'dim' missing or not a non-negative integer");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("matrix JSON: field 'entries' missing or not an array");

  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<Complex> values;
  const Json& entries = doc["entries"];
  values.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string where = "matrix JSON: entries[" + std::to_string(k) + "]";
    const Json& pair = entries[k];
    if (!pair.is_array() || pair.size() != 2) throw ParseError(where + ": expected [re, im]");
    values.emplace_back(json_real(pair[0], where), json_real(pair[1], where));
  }
  return from_values(dim, values, "matrix JSON");
}

AnyGateMatrix parse_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_matrix_json(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(path.string() + ": " + e.what());
  }
}

Json matrix_to_json(const GateMatrix2& m) { return square_to_json(m); }
Json matrix_to_json(const GateMatrix4& m) { return square_to_json(m); }
Json matrix_to_json(const AnyGateMatrix& m) {
  return std::visit([](const auto& x) { return square_to_json(x); }, m);
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

Circuit parse_circuit(std::string_view text, const std::filesystem::path& base_dir,
                      const Tolerance& tol) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (tokens[0] == "lines") {
      if (circuit) throw ParseError(where + ": 'lines' given twice");
      if (tokens.size() != 2) throw ParseError(where + ": expected 'lines <n>'");
      std::size_t n = 0;
      const char* end = tokens[1].data() + tokens[1].size();
      const auto [ptr, ec] = std::from_chars(tokens[1].data(), end, n);
      if (ec != std::errc() || ptr != end || n == 0)
        throw ParseError(where + ": line count must be a positive integer");
      circuit.emplace(n);
      continue;
    }
    if (tokens[0] != "gate") throw ParseError(where + ": unknown directive '" + std::string(tokens[0]) + "'");
    if (!circuit) throw ParseError(where + ": 'gate' before 'lines'");
    if (tokens.size() < 4) throw ParseError(where + ": incomplete gate");

    const std::string label(tokens[1]);
    std::size_t k = 2;
    std::vector<std::size_t> lines;
    while (k < tokens.size() && tokens[k] != "inline" && tokens[k] != "file") {
      lines.push_back(parse_line_index(tokens[k], circuit->num_lines(), where));
      ++k;
    }
    if (k == tokens.size()) throw ParseError(where + ": expected 'inline' or 'file'");
    if (lines.empty() || lines.size() > 2)
      throw ParseError(where + ": a gate takes one or two line indices");
    if (lines.size() == 2 && lines[0] == lines[1])
      throw LineIndexError(where + ": duplicate line " + std::to_string(lines[0] + 1));

    AnyGateMatrix m;
    if (tokens[k] == "inline") {
      std::vector<Complex> values;
      for (std::size_t q = k + 1; q < tokens.size(); ++q) {
        const std::string_view tok = tokens[q];
        const auto comma = tok.find(',');
        if (comma == std::string_view::npos)
          throw ParseError(where + ": entry '" + std::string(tok) + "' is not re,im");
        values.emplace_back(parse_real(tok.substr(0, comma), where),
                            parse_real(tok.substr(comma + 1), where));
      }
      const std::size_t dim = values.size() == 4 ? 2 : values.size() == 16 ? 4 : 0;
      if (dim == 0) {
        throw DimensionError(where + ": expected 4 or 16 entries, got " +
                             std::to_string(values.size()));
      }
      m = from_values(dim, values, where);
    } else {
      if (k + 2 != tokens.size()) throw ParseError(where + ": expected 'file <path>'");
      const std::filesystem::path p(std::string(tokens[k + 1]));
      m = parse_matrix_file(p.is_absolute() ? p : base_dir / p);
    }

    const std::size_t want_dim = lines.size() == 1 ? 2 : 4;
    const std::size_t got_dim = std::holds_alternative<GateMatrix2>(m) ? 2 : 4;
    if (want_dim != got_dim) {
      throw DimensionError(where + ": " + std::to_string(lines.size()) + "-line gate with a " +
                           std::to_string(got_dim) + "x" + std::to_string(got_dim) + " matrix");
    }
    if (lines.size() == 1) {
      const auto& g = std::get<GateMatrix2>(m);
      require_unitary(g, tol, where + " gate '" + label + "'");
      circuit->append(GateInstance::single(label, lines[0], g));
    } else {
      const auto& g = std::get<GateMatrix4>(m);
      require_unitary(g, tol, where + " gate '" + label + "'");
      circuit->append(GateInstance::two(label, lines[0], lines[1], g));
    }
  }
  if (!circuit) throw ParseError("circuit: missing 'lines <n>'");
  return std::move(*circuit);
}

Circuit parse_circuit_file(const std::filesystem::path& path, const Tolerance& tol) {
  const std::string text = read_text_file(path);
  return parse_circuit(text, path.parent_path(), tol);
}

std::string format_real(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string circuit_to_text(const Circuit& c) {
  std::string out = "lines " + std::to_string(c.num_lines()) + "\n";
  if (c.global_phase() != 0.0) out += "# global_phase " + format_real(c.global_phase()) + "\n";
  for (const auto& g : c.gates()) {
    out += "gate " + g.label();
    for (const auto line : g.lines()) out += " " + std::to_string(line + 1);
    out += " inline";
    auto emit = [&out](const auto& m) {
      for (const auto& z : m.entries()) out += " " + format_real(z.real()) + "," + format_real(z.imag());
    };
    if (g.arity() == 1) emit(g.matrix2()); else emit(g.matrix4());
    out += "\n";
  }
  return out;
}

Json to_json(const CanonicalSingleQubit& p) {
  return Json{{"theta", p.theta}, {"phi0", p.phi0}, {"phi1", p.phi1}, {"phi2", p.phi2}};
}

Json to_json(const PolarForm& p) {
  return Json{{"theta", p.theta}, {"phi11", p.phi11}, {"phi12", p.phi12},
              {"phi21", p.phi21}, {"phi22", p.phi22}};
}

Json hermitian_to_json(const std::optional<HermitianParams>& h, double hermiticity_residual) {
  if (!h) return Json{{"hermitian", false}, {"residual", hermiticity_residual}};
  return Json{{"hermitian", true}, {"theta", h->theta}, {"phi2", h->phi2},
              {"sign", h->sign},   {"scalar", h->scalar}};
}

Json to_json(const FactorPair& fp) {
  return Json{{"u1", matrix_to_json(fp.u1)},
              {"u2", matrix_to_json(fp.u2)},
              {"global_phase", fp.global_phase},
              {"residual", fp.residual},
              {"phase_split", fp.phase_split},
              {"sign_pattern", fp.sign_pattern},
              {"refined", fp.refined}};
}

Json to_json(const SeparabilityReport& r) {
  Json tests = Json::array();
  for (const auto& t : r.tests.tests) tests.push_back(check_to_json(t));
  Json dets = Json::array();
  for (const auto& c : r.det_conditions.conditions) dets.push_back(check_to_json(c));
  const FreePhases& fp = r.tests.free_phases;

  return Json{
      {"verdict", to_string(r.verdict)},
      {"condition1",
       {{"diagonal", r.condition1.diagonal},
        {"antidiagonal", r.condition1.antidiagonal},
        {"diagonal_spread", r.condition1.diagonal_spread},
        {"antidiagonal_spread", r.condition1.antidiagonal_spread}}},
      {"global_phase", r.normalized.global_phase},
      {"pairing", to_string(r.normalized.pairing)},
      {"tests", std::move(tests)},
      {"free_phases",
       {{"phi_a", optional_angle(fp.phi_a)},
        {"phi_b", optional_angle(fp.phi_b)},
        {"phi_c", optional_angle(fp.phi_c)},
        {"phi_d", optional_angle(fp.phi_d)}}},
      {"det_conditions", {{"conditions", std::move(dets)}, {"gauge_phase", r.det_conditions.gauge_phase}}},
      {"oracle_residual", r.oracle_residual},
      {"reconstruction_gap", r.reconstruction_gap},
      {"factors", r.factors ? to_json(*r.factors) : Json(nullptr)}};
}

Json to_json(const CostMetrics& m) {
  return Json{{"gate_count", m.gate_count},
              {"quantum_cost", m.quantum_cost},
              {"width", m.width},
              {"depth", m.depth}};
}

}  // namespace gatesep
