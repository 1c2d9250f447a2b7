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

#include "gatesep/matrix.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "gatesep/errors.hpp"

namespace gatesep {

void Tolerance::validate() const {
  for (double v : {eps_unitary, eps_match, eps_roundtrip}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::invalid_argument("tolerances must be finite and strictly positive");
    }
  }
}

GateMatrix4 tensor2x2(const GateMatrix2& u1, const GateMatrix2& u2) {
  std::array<Complex, 16> out{};
  for (std::size_t r1 = 0; r1 < 2; ++r1)
    for (std::size_t c1 = 0; c1 < 2; ++c1)
      for (std::size_t r2 = 0; r2 < 2; ++r2)
        for (std::size_t c2 = 0; c2 < 2; ++c2)
          out[(2 * r1 + r2) * 4 + (2 * c1 + c2)] = u1(r1, c1) * u2(r2, c2);
  return GateMatrix4(out);
}

GateMatrix4 swap_qubits(const GateMatrix4& a) {
  // basis index 2*q0 + q1 -> 2*q1 + q0
  constexpr std::array<std::size_t, 4> perm{0, 2, 1, 3};
  std::array<Complex, 16> out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[perm[r] * 4 + perm[c]] = a(r, c);
  return GateMatrix4(out);
}

GateMatrix2 orthonormalize_columns(const GateMatrix2& m) {
  Complex x0 = m(0, 0), x1 = m(1, 0);
  Complex y0 = m(0, 1), y1 = m(1, 1);
  double nx = std::sqrt(std::norm(x0) + std::norm(x1));
  const double ny = std::sqrt(std::norm(y0) + std::norm(y1));
  if (nx == 0.0 && ny == 0.0) return GateMatrix2::identity();
  if (nx == 0.0) {
    // Rebuild column 0 from column 1.
    y0 /= ny;
    y1 /= ny;
    return GateMatrix2({std::conj(y1), y0, -std::conj(y0), y1});
  }
  x0 /= nx;
  x1 /= nx;
  const Complex overlap = std::conj(x0) * y0 + std::conj(x1) * y1;
  y0 -= overlap * x0;
  y1 -= overlap * x1;
  const double ny2 = std::sqrt(std::norm(y0) + std::norm(y1));
  if (ny2 == 0.0) {
    y0 = -std::conj(x1);
    y1 = std::conj(x0);
  } else {
    y0 /= ny2;
    y1 /= ny2;
  }
  return GateMatrix2({x0, y0, x1, y1});
}

namespace {

template <std::size_t N>
void require_unitary_impl(const SquareMatrix<N>& a, const Tolerance& tol,
                          std::string_view what) {
  if (!all_finite(a)) {
    throw NotUnitary(std::string(what) + ": matrix has non-finite entries",
                     std::numeric_limits<double>::infinity());
  }
  const double res = unitarity_residual(a);
  if (!(res <= tol.eps_unitary)) {
    std::ostringstream msg;
    msg << what << ": matrix is not unitary (residual " << res << " > "
        << tol.eps_unitary << ")";
    throw NotUnitary(msg.str(), res);
  }
}

}  // namespace

void require_unitary(const GateMatrix2& a, const Tolerance& tol, std::string_view what) {
  require_unitary_impl(a, tol, what);
}

void require_unitary(const GateMatrix4& a, const Tolerance& tol, std::string_view what) {
  require_unitary_impl(a, tol, what);
}

double wrap_angle(double x) {
  double y = std::remainder(x, 2.0 * kPi);  // [-pi, pi]
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

Complex unit_phase(Complex z) {
  const double m = std::abs(z);
  return m == 0.0 ? Complex(1.0) : z / m;
}

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("dense matrix entry count does not match dimension");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return DenseMatrix(dim, std::move(e));
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix dimensions differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double phase_insensitive_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix dimensions differ");
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < b.entries().size(); ++i)
    if (std::abs(b.entries()[i]) > std::abs(b.entries()[pivot])) pivot = i;
  const Complex w = unit_phase(a.entries()[pivot] * std::conj(b.entries()[pivot]));
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - w * b.entries()[i]));
  return m;
}

}  // namespace gatesep
