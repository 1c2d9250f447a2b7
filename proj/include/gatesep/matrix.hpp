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

#ifndef GATESEP_MATRIX_HPP
#define GATESEP_MATRIX_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace gatesep {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Comparison thresholds. Every floating-point equality claim made by the
/// library is decided against one of these; there is no hidden epsilon.
struct Tolerance {
  double eps_unitary = 1e-9;    ///< accept a matrix as a gate
  double eps_match = 1e-9;      ///< entrywise equalities in verdicts
  double eps_roundtrip = 1e-12; ///< parametrize/realize round trips

  /// Throws std::invalid_argument unless all three are finite and > 0.
  void validate() const;
};

/// Dense row-major N x N complex matrix. Value type; no operation mutates
/// an existing matrix.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;
  static constexpr std::size_t kSize = N * N;

  constexpr SquareMatrix() = default;
  constexpr explicit SquareMatrix(const std::array<Complex, kSize>& entries)
      : entries_(entries) {}

  static constexpr SquareMatrix identity() {
    std::array<Complex, kSize> e{};
    for (std::size_t i = 0; i < N; ++i) e[i * N + i] = 1.0;
    return SquareMatrix(e);
  }

  static constexpr SquareMatrix diagonal(const std::array<Complex, N>& d) {
    std::array<Complex, kSize> e{};
    for (std::size_t i = 0; i < N; ++i) e[i * N + i] = d[i];
    return SquareMatrix(e);
  }

  constexpr Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * N + col];
  }
  constexpr Complex operator[](std::size_t flat) const { return entries_[flat]; }

  constexpr const std::array<Complex, kSize>& entries() const { return entries_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, kSize> entries_{};
};

using GateMatrix2 = SquareMatrix<2>;
using GateMatrix4 = SquareMatrix<4>;

template <std::size_t N>
SquareMatrix<N> mat_mul(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  std::array<Complex, N * N> out{};
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < N; ++k) acc += a(r, k) * b(k, c);
      out[r * N + c] = acc;
    }
  }
  return SquareMatrix<N>(out);
}

template <std::size_t N>
SquareMatrix<N> operator*(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return mat_mul(a, b);
}

template <std::size_t N>
SquareMatrix<N> operator*(Complex s, const SquareMatrix<N>& a) {
  std::array<Complex, N * N> out = a.entries();
  for (auto& z : out) z *= s;
  return SquareMatrix<N>(out);
}

template <std::size_t N>
SquareMatrix<N> operator-(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  std::array<Complex, N * N> out{};
  for (std::size_t i = 0; i < N * N; ++i) out[i] = a[i] - b[i];
  return SquareMatrix<N>(out);
}

/// Conjugate transpose.
template <std::size_t N>
SquareMatrix<N> adjoint(const SquareMatrix<N>& a) {
  std::array<Complex, N * N> out{};
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out[c * N + r] = std::conj(a(r, c));
  return SquareMatrix<N>(out);
}

template <std::size_t N>
double max_abs_entry(const SquareMatrix<N>& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

template <std::size_t N>
double frobenius_norm(const SquareMatrix<N>& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

/// max over entries of |A^dagger A - I| and |A A^dagger - I|.
template <std::size_t N>
double unitarity_residual(const SquareMatrix<N>& a) {
  const auto ad = adjoint(a);
  const auto id = SquareMatrix<N>::identity();
  return std::max(max_abs_diff(ad * a, id), max_abs_diff(a * ad, id));
}

/// max over entries of |A - A^dagger|.
template <std::size_t N>
double hermiticity_residual(const SquareMatrix<N>& a) {
  return max_abs_diff(a, adjoint(a));
}

template <std::size_t N>
bool all_finite(const SquareMatrix<N>& a) {
  for (const auto& z : a.entries())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

/// Kronecker product U1 (x) U2. U1 selects the 2x2 block, so the first
/// factor acts on the most significant qubit.
GateMatrix4 tensor2x2(const GateMatrix2& u1, const GateMatrix2& u2);

/// Exchange the two qubits of a 4x4 operator (SWAP * A * SWAP).
GateMatrix4 swap_qubits(const GateMatrix4& a);

/// Gram-Schmidt on the columns of a 2x2 matrix: normalize column 0,
/// orthogonalize column 1 against it, normalize. A zero column 1 is
/// replaced by the orthogonal complement of column 0 with unit determinant
/// phase. Returns identity for an all-zero input.
GateMatrix2 orthonormalize_columns(const GateMatrix2& m);

/// Throws NotUnitary if `unitarity_residual(a) > tol.eps_unitary` or any
/// entry is non-finite. `what` names the operation for the message.
void require_unitary(const GateMatrix2& a, const Tolerance& tol, std::string_view what);
void require_unitary(const GateMatrix4& a, const Tolerance& tol, std::string_view what);

/// Wrap an angle into (-pi, pi].
double wrap_angle(double x);

/// Unit-modulus phase of z, or 1 when z == 0.
Complex unit_phase(Complex z);

/// Square complex matrix of runtime dimension; used for whole-circuit
/// unitaries (up to 16 x 16).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t dim, std::vector<Complex> entries);

  static DenseMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// min over unit phases w of max|A - w B|, with w fixed analytically by the
/// largest-modulus entry of B. Throws DimensionError on mismatched sizes.
double phase_insensitive_distance(const DenseMatrix& a, const DenseMatrix& b);

template <std::size_t N>
DenseMatrix to_dense(const SquareMatrix<N>& a) {
  return DenseMatrix(N, std::vector<Complex>(a.entries().begin(), a.entries().end()));
}

}  // namespace gatesep

#endif  // GATESEP_MATRIX_HPP
