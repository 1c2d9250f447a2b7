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

#include "gatesep/single_qubit.hpp"

#include <charconv>
#include <string>

#include "gatesep/errors.hpp"

namespace gatesep {
namespace {

using std::numbers::sqrt2;

// Four unsigned entries of the canonical structure before the global phase
// and the mandatory sign are applied.
struct UnsignedEntries {
  Complex phase, a, b, c, d;
};

UnsignedEntries unsigned_entries(const CanonicalSingleQubit& p) {
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  return {std::polar(1.0, p.phi0), std::polar(ct, p.phi1), std::polar(st, p.phi2),
          std::polar(st, -p.phi2), std::polar(ct, -p.phi1)};
}

// Angle of z, with the zero vector mapped to 0 and the result in (-pi, pi].
double safe_arg(Complex z) { return z == Complex(0.0) ? 0.0 : wrap_angle(std::arg(z)); }

}  // namespace

GateMatrix2 realize(const CanonicalSingleQubit& p) {
  const auto e = unsigned_entries(p);
  return GateMatrix2({e.phase * e.a, e.phase * e.b, e.phase * -e.c, e.phase * e.d});
}

CanonicalSingleQubit canonicalize(const GateMatrix2& u, const Tolerance& tol) {
  require_unitary(u, tol, "canonicalize");
  const Complex a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
  const double diag = std::abs(a) + std::abs(d);
  const double off = std::abs(b) + std::abs(c);

  CanonicalSingleQubit p;
  // atan2 of the averaged moduli equals arccos|a| on unitary input and stays
  // well conditioned near theta = 0 and pi/2.
  p.theta = std::atan2(off, diag);

  // e^{2 i phi0} is read off the larger pair: a*d = cos^2 e^{2i phi0},
  // -b*c = sin^2 e^{2i phi0}. Halving the angle fixes the branch integer;
  // phi1 and phi2 are then solved relative to that phi0, so the pair
  // (phi0, phi1) or (phi0, phi2) absorbs the remaining sign.
  p.phi0 = 0.5 * safe_arg(diag >= off ? a * d : -b * c);
  const Complex g = std::polar(1.0, -p.phi0);
  // Both members of each conjugate pair carry the same phase information.
  p.phi1 = safe_arg(a * g + std::conj(d * g));
  p.phi2 = safe_arg(b * g - std::conj(c * g));
  p.phi0 = wrap_angle(p.phi0);
  return p;
}

PolarForm polar_form(const GateMatrix2& u, const Tolerance& tol) {
  require_unitary(u, tol, "polar_form");
  auto phase = [&](Complex z) { return std::abs(z) < tol.eps_match ? 0.0 : safe_arg(z); };
  PolarForm f;
  f.theta = std::atan2(std::abs(u(0, 1)) + std::abs(u(1, 0)),
                       std::abs(u(0, 0)) + std::abs(u(1, 1)));
  f.phi11 = phase(u(0, 0));
  f.phi12 = phase(u(0, 1));
  f.phi21 = phase(u(1, 0));
  f.phi22 = phase(u(1, 1));
  return f;
}

std::array<GateMatrix2, 4> equivalent_sign_forms(const CanonicalSingleQubit& p) {
  const auto e = unsigned_entries(p);
  const Complex s = e.phase;
  return {GateMatrix2({s * -e.a, s * e.b, s * e.c, s * e.d}),
          GateMatrix2({s * e.a, s * -e.b, s * e.c, s * e.d}),
          GateMatrix2({s * e.a, s * e.b, s * -e.c, s * e.d}),
          GateMatrix2({s * e.a, s * e.b, s * e.c, s * -e.d})};
}

std::optional<HermitianParams> classify_hermitian(const GateMatrix2& u, const Tolerance& tol) {
  require_unitary(u, tol, "classify_hermitian");
  if (!(hermiticity_residual(u) <= tol.eps_match)) return std::nullopt;

  const Complex a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
  HermitianParams h;

  // A Hermitian unitary has eigenvalues +-1, so its trace is -2, 0 or 2.
  // Only the traceless ones belong to the U_H family.
  const Complex trace = a + d;
  if (std::abs(trace) > 1.0) {
    h.scalar = true;
    h.sign = trace.real() > 0.0 ? 1 : -1;
    return h;
  }

  const double half_diag = 0.5 * (a.real() - d.real());  // sign * cos(theta)
  if (half_diag > tol.eps_match) {
    h.sign = 1;
  } else if (half_diag < -tol.eps_match) {
    h.sign = -1;
  } else {
    h.sign = b.imag() >= 0.0 ? 1 : -1;
  }
  const double off = 0.5 * (std::abs(b) + std::abs(c));
  h.theta = std::atan2(off, h.sign * half_diag);
  // b = sign * i sin(theta) e^{i phi2}
  const Complex rotated = (b + std::conj(c)) / Complex(0.0, static_cast<double>(h.sign));
  h.phi2 = safe_arg(rotated);
  return h;
}

GateMatrix2 realize_hermitian(const HermitianParams& h) {
  const double s = h.sign >= 0 ? 1.0 : -1.0;
  if (h.scalar) return Complex(s) * GateMatrix2::identity();
  const double ct = std::cos(h.theta);
  const double st = std::sin(h.theta);
  const Complex i(0.0, 1.0);
  return GateMatrix2({s * ct, s * i * std::polar(st, h.phi2), -s * i * std::polar(st, -h.phi2),
                      -s * ct});
}

GateMatrix2 named_gate(NamedGate name, double xi) {
  const Complex i(0.0, 1.0);
  switch (name) {
    case NamedGate::I:
      return GateMatrix2::identity();
    case NamedGate::X:
      return GateMatrix2({0.0, 1.0, 1.0, 0.0});
    case NamedGate::iY:
      return GateMatrix2({0.0, i, -i, 0.0});
    case NamedGate::Z:
      return GateMatrix2({1.0, 0.0, 0.0, -1.0});
    case NamedGate::H:
      return GateMatrix2({1.0 / sqrt2, 1.0 / sqrt2, 1.0 / sqrt2, -1.0 / sqrt2});
    case NamedGate::P:
      if (!std::isfinite(xi)) throw UnknownGateName("phase gate angle must be finite");
      return GateMatrix2({1.0, 0.0, 0.0, std::polar(1.0, xi)});
  }
  throw UnknownGateName("unknown gate");
}

GateMatrix2 named_gate(std::string_view name) {
  if (name == "I") return named_gate(NamedGate::I);
  if (name == "X") return named_gate(NamedGate::X);
  if (name == "iY") return named_gate(NamedGate::iY);
  if (name == "Z") return named_gate(NamedGate::Z);
  if (name == "H") return named_gate(NamedGate::H);
  if (name.size() > 3 && name.substr(0, 2) == "P(" && name.back() == ')') {
    const std::string_view arg = name.substr(2, name.size() - 3);
    double xi = 0.0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), xi);
    if (ec == std::errc() && ptr == arg.data() + arg.size() && std::isfinite(xi)) {
      return named_gate(NamedGate::P, xi);
    }
  }
  throw UnknownGateName("unknown gate name '" + std::string(name) + "'");
}

}  // namespace gatesep
