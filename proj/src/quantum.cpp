// Copyright 2026 The qpdsim Authors.
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

#include "qpd/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qpd {

namespace {

bool finite(cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

const char* qubit_name(Qubit q) {
  switch (q) {
    case Qubit::Q: return "Q";
    case Qubit::A: return "A";
    case Qubit::B: return "B";
  }
  return "?";
}

int bit_position(int num_qubits, Qubit q) {
  if (num_qubits == 3) {
    switch (q) {
      case Qubit::Q: return 2;
      case Qubit::A: return 1;
      case Qubit::B: return 0;
    }
  }
  if (num_qubits == 2) {
    switch (q) {
      case Qubit::Q: break;
      case Qubit::A: return 1;
      case Qubit::B: return 0;
    }
    throw std::invalid_argument("qubit Q is not part of a two-qubit register");
  }
  throw std::invalid_argument("register size must be 2 or 3 qubits");
}

//------------------------------------------------------------------------
// Unitary2
//------------------------------------------------------------------------

Unitary2::Unitary2(cx u00, cx u01, cx u10, cx u11) : m_{u00, u01, u10, u11} {
  for (const cx& v : m_) {
    if (!finite(v)) throw std::invalid_argument("non-finite gate entry");
  }
  // U†U = I, entrywise
  const cx g00 = std::conj(u00) * u00 + std::conj(u10) * u10;
  const cx g01 = std::conj(u00) * u01 + std::conj(u10) * u11;
  const cx g11 = std::conj(u01) * u01 + std::conj(u11) * u11;
  if (std::abs(g00 - 1.0) > kAlgebraTol || std::abs(g11 - 1.0) > kAlgebraTol ||
      std::abs(g01) > kAlgebraTol) {
    throw std::invalid_argument("matrix is not unitary");
  }
}

Unitary2 Unitary2::adjoint() const {
  return Unitary2(std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
                  std::conj(m_[3]));
}

Unitary2 identity_gate() { return Unitary2(1, 0, 0, 1); }
Unitary2 pauli_x() { return Unitary2(0, 1, 1, 0); }
Unitary2 pauli_y() { return Unitary2(0, cx(0, -1), cx(0, 1), 0); }
Unitary2 pauli_z() { return Unitary2(1, 0, 0, -1); }

Unitary2 exp_ix(double theta) {
  const double c = std::cos(theta);
  const cx is(0, std::sin(theta));
  return Unitary2(c, is, is, c);
}

Unitary2 rotation_y(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Unitary2(c, -s, s, c);
}

//------------------------------------------------------------------------
// Matrix4
//------------------------------------------------------------------------

Matrix4 matmul(const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      cx sum = 0;
      for (int k = 0; k < 4; ++k) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  }
  return out;
}

Matrix4 adjoint(const Matrix4& a) {
  Matrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

double max_abs_diff(const Matrix4& a, const Matrix4& b) {
  double m = 0;
  for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
  return m;
}

bool is_unitary(const Matrix4& a, double tol) {
  const Matrix4 g = matmul(adjoint(a), a);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const cx want = (i == j) ? cx(1) : cx(0);
      if (std::abs(g(i, j) - want) > tol) return false;
    }
  }
  return true;
}

//------------------------------------------------------------------------
// StateVector
//------------------------------------------------------------------------

StateVector StateVector::basis_state(int num_qubits, std::size_t index) {
  if (num_qubits != 2 && num_qubits != 3) {
    throw std::invalid_argument("register size must be 2 or 3 qubits");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<cx> amps(dim, cx(0));
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<cx> amps) {
  if (num_qubits != 2 && num_qubits != 3) {
    throw std::invalid_argument("register size must be 2 or 3 qubits");
  }
  if (amps.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count does not match register size");
  }
  double n2 = 0;
  for (const cx& a : amps) {
    if (!finite(a)) throw std::invalid_argument("non-finite amplitude");
    n2 += std::norm(a);
  }
  if (std::abs(n2 - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("state is not normalized: |norm^2 - 1| = " +
                                std::to_string(std::abs(n2 - 1.0)));
  }
  return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm_squared() const {
  double n2 = 0;
  for (const cx& a : amps_) n2 += std::norm(a);
  return n2;
}

double StateVector::max_abs_diff(const StateVector& other) const {
  if (other.dim() != dim()) {
    throw std::invalid_argument("state dimensions differ");
  }
  double m = 0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    m = std::max(m, std::abs(amps_[i] - other.amps_[i]));
  }
  return m;
}

//------------------------------------------------------------------------
// Gate application
//------------------------------------------------------------------------

StateVector apply_single_qubit(const StateVector& state, const Unitary2& gate,
                               Qubit target) {
  const std::size_t tbit = std::size_t{1}
                           << bit_position(state.num_qubits(), target);
  std::vector<cx> out = state.amps_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i & tbit) continue;  // visit each (|0>,|1>) pair once
    const std::size_t j = i | tbit;
    const cx a0 = out[i];
    const cx a1 = out[j];
    out[i] = gate(0, 0) * a0 + gate(0, 1) * a1;
    out[j] = gate(1, 0) * a0 + gate(1, 1) * a1;
  }
  return StateVector(state.num_qubits(), std::move(out));
}

StateVector apply_controlled(const StateVector& state, const Unitary2& gate,
                             const std::vector<Qubit>& controls, Qubit target) {
  if (controls.empty()) {
    throw std::invalid_argument("controlled gate requires at least one control");
  }
  std::size_t cmask = 0;
  for (Qubit c : controls) {
    if (c == target) {
      throw std::invalid_argument("control and target qubits overlap");
    }
    const std::size_t bit = std::size_t{1}
                            << bit_position(state.num_qubits(), c);
    if (cmask & bit) throw std::invalid_argument("duplicate control qubit");
    cmask |= bit;
  }
  const std::size_t tbit = std::size_t{1}
                           << bit_position(state.num_qubits(), target);
  std::vector<cx> out = state.amps_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i & tbit) continue;
    if ((i & cmask) != cmask) continue;  // all controls at |1|
    const std::size_t j = i | tbit;
    const cx a0 = out[i];
    const cx a1 = out[j];
    out[i] = gate(0, 0) * a0 + gate(0, 1) * a1;
    out[j] = gate(1, 0) * a0 + gate(1, 1) * a1;
  }
  return StateVector(state.num_qubits(), std::move(out));
}

Matrix4 entangler(double gamma) {
  const double c = std::cos(gamma / 2);
  const cx is(0, std::sin(gamma / 2));
  Matrix4 j;
  // cos(g/2) on the diagonal, i sin(g/2) on the XX antidiagonal
  for (int k = 0; k < 4; ++k) {
    j(k, k) = c;
    j(k, 3 - k) = is;
  }
  return j;
}

StateVector apply_entangler(const StateVector& state, double gamma) {
  const int abit = bit_position(state.num_qubits(), Qubit::A);
  const int bbit = bit_position(state.num_qubits(), Qubit::B);
  const std::size_t amask = std::size_t{1} << abit;
  const std::size_t bmask = std::size_t{1} << bbit;
  const double c = std::cos(gamma / 2);
  const cx is(0, std::sin(gamma / 2));
  // J couples |ab> with |~a~b>; apply on each (i, i^amask^bmask) pair.
  std::vector<cx> out = state.amps_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t j = i ^ amask ^ bmask;
    if (i >= j) continue;
    const cx a0 = out[i];
    const cx a1 = out[j];
    out[i] = c * a0 + is * a1;
    out[j] = is * a0 + c * a1;
  }
  return StateVector(state.num_qubits(), std::move(out));
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
  StateVector s = state;
  for (const CircuitOp& op : circuit) {
    if (const auto* g = std::get_if<ControlledGate>(&op)) {
      s = g->controls.empty()
              ? apply_single_qubit(s, g->gate, g->target)
              : apply_controlled(s, g->gate, g->controls, g->target);
    } else {
      s = apply_entangler(s, std::get<EntanglerGate>(op).gamma);
    }
  }
  return s;
}

//------------------------------------------------------------------------
// Partial trace
//------------------------------------------------------------------------

void DensityMatrix2::validate() const {
  double tr = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!finite(rho(i, j))) {
        throw std::invalid_argument("non-finite density matrix entry");
      }
      if (std::abs(rho(i, j) - std::conj(rho(j, i))) > kAlgebraTol) {
        throw std::invalid_argument("density matrix is not Hermitian");
      }
    }
    tr += rho(i, i).real();
  }
  if (std::abs(tr - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
}

double DensityMatrix2::trace_real() const {
  double tr = 0;
  for (int i = 0; i < 4; ++i) tr += rho(i, i).real();
  return tr;
}

DensityMatrix2 partial_trace(const StateVector& state, Qubit discard) {
  if (state.num_qubits() != 3) {
    throw std::invalid_argument("partial trace expects a three-qubit state");
  }
  const int dbit = bit_position(3, discard);
  // Retained labels in register order.
  static constexpr Qubit kOrder[3] = {Qubit::Q, Qubit::A, Qubit::B};
  Qubit hi = Qubit::Q, lo = Qubit::B;
  {
    int found = 0;
    for (Qubit q : kOrder) {
      if (q == discard) continue;
      (found++ == 0 ? hi : lo) = q;
    }
  }
  const int hbit = bit_position(3, hi);
  const int lbit = bit_position(3, lo);

  DensityMatrix2 dm{Matrix4{}, hi, lo};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      cx sum = 0;
      for (int d = 0; d < 2; ++d) {
        const std::size_t ri = (std::size_t(r >> 1) << hbit) |
                               (std::size_t(r & 1) << lbit) |
                               (std::size_t(d) << dbit);
        const std::size_t ci = (std::size_t(c >> 1) << hbit) |
                               (std::size_t(c & 1) << lbit) |
                               (std::size_t(d) << dbit);
        sum += state.amplitude(ri) * std::conj(state.amplitude(ci));
      }
      dm.rho(r, c) = sum;
    }
  }
  return dm;
}

}  // namespace qpd
