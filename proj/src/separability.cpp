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

#include "gatesep/separability.hpp"

#include <algorithm>

namespace gatesep {
namespace {

struct PairingSpec {
  Pairing id;
  std::size_t x, y;
  double sign;  // y = sign * conj(x) after normalization
};

constexpr std::array<PairingSpec, 8> kPairings{{
    {Pairing::AP, entry::a, entry::p, 1.0},
    {Pairing::DM, entry::d, entry::m, 1.0},
    {Pairing::FK, entry::f, entry::k, 1.0},
    {Pairing::GJ, entry::g, entry::j, 1.0},
    {Pairing::BO, entry::b, entry::o, -1.0},
    {Pairing::CN, entry::c, entry::n, -1.0},
    {Pairing::EL, entry::e, entry::l, -1.0},
    {Pairing::HI, entry::h, entry::i, -1.0},
}};

double spread(std::initializer_list<double> values) {
  const auto [lo, hi] = std::minmax(values);
  return hi - lo;
}

Complex det2(Complex p, Complex q, Complex r, Complex s) { return p * s - q * r; }

}  // namespace

std::string_view to_string(Pairing pairing) {
  switch (pairing) {
    case Pairing::AP: return "p=a*";
    case Pairing::DM: return "m=d*";
    case Pairing::FK: return "f=k*";
    case Pairing::GJ: return "g=j*";
    case Pairing::BO: return "o=-b*";
    case Pairing::CN: return "n=-c*";
    case Pairing::EL: return "e=-l*";
    case Pairing::HI: return "h=-i*";
    case Pairing::None: return "none";
  }
  return "none";
}

PhaseNormalized4 extract_global_phase(const GateMatrix4& a, const Tolerance& tol) {
  require_unitary(a, tol, "extract_global_phase");

  auto strength = [&](const PairingSpec& s) {
    return std::min(std::abs(a[s.x]), std::abs(a[s.y]));
  };
  double best = 0.0;
  for (const auto& s : kPairings) best = std::max(best, strength(s));

  PhaseNormalized4 out;
  out.entries = a;
  if (best <= tol.eps_match) return out;

  for (const auto& s : kPairings) {
    if (strength(s) < 0.5 * best) continue;
    // y e^{-i phi} = sign * conj(x) e^{i phi}  =>  e^{2 i phi} ~ sign * x * y
    const Complex twice = s.sign * a[s.x] * a[s.y];
    out.global_phase = 0.5 * std::arg(twice);
    out.pairing = s.id;
    break;
  }
  out.entries = std::polar(1.0, -out.global_phase) * a;
  return out;
}

Condition1 check_condition1(const GateMatrix4& a, const Tolerance& tol) {
  Condition1 c;
  c.diagonal_spread =
      spread({std::abs(a(0, 0)), std::abs(a(1, 1)), std::abs(a(2, 2)), std::abs(a(3, 3))});
  c.antidiagonal_spread =
      spread({std::abs(a(3, 0)), std::abs(a(2, 1)), std::abs(a(1, 2)), std::abs(a(0, 3))});
  c.diagonal = c.diagonal_spread <= tol.eps_match;
  c.antidiagonal = c.antidiagonal_spread <= tol.eps_match;
  return c;
}

TestBattery run_tests(const PhaseNormalized4& normalized, const Tolerance& tol) {
  using namespace entry;
  const auto& x = normalized.entries;
  auto conj_gap = [&](std::size_t lhs, std::size_t rhs, double sign) {
    return std::abs(x[lhs] - sign * std::conj(x[rhs]));
  };
  auto modulus_gap = [&](std::size_t u, std::size_t v) {
    return std::abs(std::abs(x[u]) - std::abs(x[v]));
  };

  TestBattery out;
  const std::array<double, 5> residuals{
      std::max({conj_gap(p, a, 1.0), conj_gap(o, b, -1.0), conj_gap(n, c, -1.0),
                conj_gap(m, d, 1.0)}),
      std::max(conj_gap(f, k, 1.0), modulus_gap(f, a)),
      std::max(conj_gap(e, l, -1.0), modulus_gap(e, b)),
      std::max(conj_gap(h, i, -1.0), modulus_gap(h, c)),
      std::max(conj_gap(g, j, 1.0), modulus_gap(g, d)),
  };
  for (std::size_t t = 0; t < 5; ++t) {
    out.tests[t] = {residuals[t] <= tol.eps_match, residuals[t]};
  }

  auto free_phase = [&](std::size_t target, std::size_t ref) -> std::optional<double> {
    if (std::abs(x[ref]) <= tol.eps_match) return std::nullopt;
    return wrap_angle(std::arg(x[target] * std::conj(x[ref])));
  };
  out.free_phases = {free_phase(f, a), free_phase(e, b), free_phase(h, c), free_phase(g, d)};
  return out;
}

DetConditions check_det_conditions(const PhaseNormalized4& normalized, const Tolerance& tol) {
  using namespace entry;
  const auto& x = normalized.entries;
  const std::array<Complex, 4> lhs{
      det2(x[a], x[b], x[e], x[f]), det2(x[c], x[d], x[g], x[h]),
      det2(x[a], x[c], x[i], x[k]), det2(x[b], x[d], x[j], x[l])};
  const std::array<Complex, 4> rhs{
      det2(x[k], x[l], x[o], x[p]), det2(x[i], x[j], x[m], x[n]),
      det2(x[f], x[h], x[n], x[p]), det2(x[e], x[g], x[m], x[o])};

  // Block determinants scale by e^{2i phi} under a global phase while their
  // conjugates scale by e^{-2i phi}, so the conditions are only defined up
  // to one common phase w. For a phase-normalized product gate w = 1.
  Complex weight = 0.0;
  for (std::size_t q = 0; q < 4; ++q) weight += lhs[q] * rhs[q];
  const Complex w = std::abs(weight) <= tol.eps_match ? Complex(1.0) : std::conj(weight) / std::abs(weight);

  DetConditions out;
  out.gauge_phase = std::arg(w);
  for (std::size_t q = 0; q < 4; ++q) {
    const double r = std::abs(w * lhs[q] - std::conj(rhs[q]));
    out.conditions[q] = {r <= tol.eps_match, r};
  }
  return out;
}

GateMatrix4 realign(const GateMatrix4& a) {
  std::array<Complex, 16> out{};
  for (std::size_t r1 = 0; r1 < 2; ++r1)
    for (std::size_t r2 = 0; r2 < 2; ++r2)
      for (std::size_t c1 = 0; c1 < 2; ++c1)
        for (std::size_t c2 = 0; c2 < 2; ++c2)
          out[(2 * r1 + c1) * 4 + (2 * r2 + c2)] = a(2 * r1 + r2, 2 * c1 + c2);
  return GateMatrix4(out);
}

OracleResult separability_oracle(const GateMatrix4& a, const Tolerance& tol) {
  require_unitary(a, tol, "separability_oracle");
  const GateMatrix4 r = realign(a);
  const GateMatrix4 gram = adjoint(r) * r;

  using Vec4 = std::array<Complex, 4>;
  auto norm = [](const Vec4& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
  };
  auto apply = [](const GateMatrix4& m, const Vec4& v) {
    Vec4 out{};
    for (std::size_t row = 0; row < 4; ++row)
      for (std::size_t col = 0; col < 4; ++col) out[row] += m(row, col) * v[col];
    return out;
  };

  // Start from the largest column of the Gram matrix: it lies in the range
  // of R^dagger R, so it cannot be orthogonal to the dominant eigenvector.
  Vec4 v{};
  double best = -1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    Vec4 column{gram(0, col), gram(1, col), gram(2, col), gram(3, col)};
    const double nc = norm(column);
    if (nc > best) {
      best = nc;
      v = column;
    }
  }
  {
    const double nv = norm(v);
    for (auto& z : v) z /= nv;
  }

  constexpr int kMaxIterations = 200;
  for (int it = 0; it < kMaxIterations; ++it) {
    Vec4 next = apply(gram, v);
    const double nn = norm(next);
    if (nn == 0.0) break;
    for (auto& z : next) z /= nn;
    Complex overlap = 0.0;
    for (std::size_t q = 0; q < 4; ++q) overlap += std::conj(v[q]) * next[q];
    const Complex w = unit_phase(overlap);
    double change = 0.0;
    for (std::size_t q = 0; q < 4; ++q) change = std::max(change, std::abs(next[q] - w * v[q]));
    v = next;
    if (change <= 1e-15) break;
  }

  const Vec4 rv = apply(r, v);
  double residual_sq = 0.0;
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t col = 0; col < 4; ++col)
      residual_sq += std::norm(r(row, col) - rv[row] * std::conj(v[col]));

  OracleResult out;
  out.residual = std::sqrt(residual_sq);
  if (out.residual <= tol.eps_match) {
    const double scale = std::numbers::sqrt2 / norm(rv);
    GateMatrix2 u1({rv[0] * scale, rv[1] * scale, rv[2] * scale, rv[3] * scale});
    const double s2 = std::numbers::sqrt2;
    GateMatrix2 u2({std::conj(v[0]) * s2, std::conj(v[1]) * s2, std::conj(v[2]) * s2,
                    std::conj(v[3]) * s2});
    out.factors = std::array<GateMatrix2, 2>{orthonormalize_columns(u1), orthonormalize_columns(u2)};
  }
  return out;
}

}  // namespace gatesep
