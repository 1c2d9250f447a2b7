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

#include "gatesep/factorize.hpp"

#include <limits>
#include <sstream>

#include "gatesep/errors.hpp"

namespace gatesep {
namespace {

Complex det2(Complex p, Complex q, Complex r, Complex s) { return p * s - q * r; }

// Principal square root; determinants at or below eps_match are treated as
// exact zeros so noise is not amplified by the root.
Complex root(Complex z, const Tolerance& tol) {
  return std::abs(z) <= tol.eps_match ? Complex(0.0) : std::sqrt(z);
}

// Choose the sign of `r` (a root of a conjugated determinant) so that it
// matches conj(target).
Complex align_conjugate(Complex r, Complex target) {
  const Complex want = std::conj(target);
  return std::abs(r - want) <= std::abs(-r - want) ? r : -r;
}

GateMatrix2 su2_like(Complex x1, Complex x2, Complex y1, Complex y2) {
  return GateMatrix2({x1, x2, -y2, y1});
}

GateMatrix2 block(const GateMatrix4& n, std::size_t r1, std::size_t c1) {
  return GateMatrix2({n(2 * r1, 2 * c1), n(2 * r1, 2 * c1 + 1), n(2 * r1 + 1, 2 * c1),
                      n(2 * r1 + 1, 2 * c1 + 1)});
}

// Re-solve both factors from the block of N selected by the largest entry of
// `u1`: that entry is the best-conditioned divisor for U2, and U1 then
// follows by projecting each block onto U2.
std::pair<GateMatrix2, GateMatrix2> refine(const GateMatrix4& n, const GateMatrix2& u1) {
  std::size_t pivot = 0;
  for (std::size_t q = 1; q < 4; ++q)
    if (std::abs(u1[q]) > std::abs(u1[pivot])) pivot = q;
  const GateMatrix2 dominant = block(n, pivot / 2, pivot % 2);
  const GateMatrix2 u2 = orthonormalize_columns(Complex(1.0) / u1[pivot] * dominant);

  std::array<Complex, 4> entries{};
  for (std::size_t q = 0; q < 4; ++q) {
    const GateMatrix2 b = block(n, q / 2, q % 2);
    Complex overlap = 0.0;
    for (std::size_t t = 0; t < 4; ++t) overlap += std::conj(u2[t]) * b[t];
    entries[q] = overlap / 2.0;  // <U2, U2> = 2 for a unitary
  }
  return {orthonormalize_columns(GateMatrix2(entries)), u2};
}

}  // namespace

BlockDeterminants block_determinants(const PhaseNormalized4& normalized) {
  using namespace entry;
  const auto& x = normalized.entries;
  return {
      det2(x[a], x[b], x[e], x[f]),  // af - be
      det2(x[c], x[d], x[g], x[h]),  // ch - gd
      det2(x[k], x[l], x[o], x[p]),  // kp - lo
      det2(x[i], x[j], x[m], x[n]),  // in - jm
      det2(x[a], x[c], x[i], x[k]),  // ak - ci
      det2(x[b], x[d], x[j], x[l]),  // bl - jd
      det2(x[f], x[h], x[n], x[p]),  // fp - hn
      det2(x[e], x[g], x[m], x[o]),  // eo - gm
  };
}

FactorPair reconstruct(const PhaseNormalized4& normalized, const Tolerance& tol) {
  const auto& target = normalized.entries;
  const BlockDeterminants dets = block_determinants(normalized);
  const Complex ru1 = root(dets.u1sq, tol), ru2 = root(dets.u2sq, tol);
  const Complex ru1c = root(dets.u1sq_conj, tol), ru2c = root(dets.u2sq_conj, tol);
  const Complex rv1 = root(dets.v1sq, tol), rv2 = root(dets.v2sq, tol);
  const Complex rv1c = root(dets.v1sq_conj, tol), rv2c = root(dets.v2sq_conj, tol);

  // Patterns in order of increasing number of flipped signs.
  constexpr std::array<int, 8> kPatterns{0b000, 0b001, 0b010, 0b100,
                                         0b011, 0b101, 0b110, 0b111};
  double best_residual = std::numeric_limits<double>::infinity();
  GateMatrix2 best_u1, best_u2;
  int best_pattern = 0;
  for (int pattern : kPatterns) {
    const double su = (pattern & 0b001) ? -1.0 : 1.0;
    const double sv = (pattern & 0b010) ? -1.0 : 1.0;
    const double overall = (pattern & 0b100) ? -1.0 : 1.0;

    const Complex x1 = ru1, x2 = su * ru2;
    const GateMatrix2 u1 =
        su2_like(x1, x2, align_conjugate(ru1c, x1), align_conjugate(ru2c, x2));
    const Complex w1 = rv1, w2 = sv * rv2;
    const GateMatrix2 u2 = Complex(overall) *
        su2_like(w1, w2, align_conjugate(rv1c, w1), align_conjugate(rv2c, w2));

    const double residual = max_abs_diff(target, tensor2x2(u1, u2));
    if (residual < best_residual) {
      best_residual = residual;
      best_u1 = u1;
      best_u2 = u2;
      best_pattern = pattern;
    }
    if (residual <= tol.eps_match) break;
  }

  FactorPair fp;
  fp.global_phase = normalized.global_phase;
  fp.sign_pattern = best_pattern;
  fp.u1 = orthonormalize_columns(best_u1);
  fp.u2 = orthonormalize_columns(best_u2);
  fp.residual = max_abs_diff(target, tensor2x2(fp.u1, fp.u2));

  if (!(fp.residual <= tol.eps_match)) {
    const auto [u1, u2] = refine(target, fp.u1);
    const double residual = max_abs_diff(target, tensor2x2(u1, u2));
    if (residual < fp.residual) {
      fp.u1 = u1;
      fp.u2 = u2;
      fp.residual = residual;
      fp.refined = true;
    }
  }
  if (!(fp.residual <= tol.eps_match)) {
    std::ostringstream msg;
    msg << "reconstruct: no square-root sign pattern reproduces the gate (best residual "
        << fp.residual << ")";
    throw ReconstructionFailed(msg.str(), fp.residual);
  }

  // Gauge: first entry of u1 with modulus above eps_match is made real and
  // nonnegative.
  for (std::size_t q = 0; q < 4; ++q) {
    if (std::abs(fp.u1[q]) > tol.eps_match) {
      const Complex w = std::conj(unit_phase(fp.u1[q]));
      fp.u1 = w * fp.u1;
      fp.u2 = std::conj(w) * fp.u2;
      break;
    }
  }
  const Complex det = fp.u1(0, 0) * fp.u1(1, 1) - fp.u1(0, 1) * fp.u1(1, 0);
  fp.phase_split = 0.5 * std::arg(det);
  fp.residual = max_abs_diff(target, tensor2x2(fp.u1, fp.u2));
  return fp;
}

FactorPair phase_family(const FactorPair& fp, double alpha) {
  FactorPair out = fp;
  out.u1 = std::polar(1.0, alpha) * fp.u1;
  out.u2 = std::polar(1.0, -alpha) * fp.u2;
  out.phase_split = wrap_angle(fp.phase_split + alpha);
  return out;
}

}  // namespace gatesep
