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

/**
 * @file
 * Dense state-vector simulation of two- and three-qubit registers:
 * gate application, controlled gates, the XX entangler, and partial
 * traces down to two-qubit density matrices.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace qpd {

using cx = std::complex<double>;

/// Absolute tolerance for algebraic identities (norms, unitarity, traces).
inline constexpr double kAlgebraTol = 1e-12;
/// Slack allowed below zero for numerically computed PSD spectra.
inline constexpr double kPsdSlack = 1e-10;

/// Qubit labels. Three-qubit registers are ordered (Q, A, B) most
/// significant first, so basis index = 4*q + 2*a + b. Two-qubit
/// registers hold (A, B) with index = 2*a + b.
enum class Qubit { Q, A, B };

const char* qubit_name(Qubit q);

/// Bit position of a qubit label inside a register of `num_qubits`.
/// Throws std::invalid_argument for labels not present in the register.
int bit_position(int num_qubits, Qubit q);

//------------------------------------------------------------------------
// Small complex matrices
//------------------------------------------------------------------------

/// 2x2 unitary, row major. Construction checks U†U = I entrywise to
/// kAlgebraTol and rejects non-finite entries.
class Unitary2 {
 public:
  Unitary2(cx u00, cx u01, cx u10, cx u11);

  cx operator()(int row, int col) const { return m_[2 * row + col]; }
  const std::array<cx, 4>& data() const { return m_; }

  Unitary2 adjoint() const;

 private:
  std::array<cx, 4> m_;
};

Unitary2 identity_gate();
Unitary2 pauli_x();
Unitary2 pauli_y();  // [[0, -i], [i, 0]]
Unitary2 pauli_z();

/// exp(i*theta*sigma_x) = cos(theta) I + i sin(theta) sigma_x.
Unitary2 exp_ix(double theta);

/// Real rotation exp(-i*theta*sigma_y): |0> -> cos|0> + sin|1>.
Unitary2 rotation_y(double theta);

/// 4x4 complex matrix, row major. Unvalidated aggregate; used for
/// two-qubit unitaries and density matrices.
struct Matrix4 {
  std::array<cx, 16> m{};

  cx& operator()(int row, int col) { return m[4 * row + col]; }
  cx operator()(int row, int col) const { return m[4 * row + col]; }
};

Matrix4 matmul(const Matrix4& a, const Matrix4& b);
Matrix4 adjoint(const Matrix4& a);
double max_abs_diff(const Matrix4& a, const Matrix4& b);
bool is_unitary(const Matrix4& a, double tol = kAlgebraTol);

//------------------------------------------------------------------------
// State vectors
//------------------------------------------------------------------------

class StateVector {
 public:
  /// |index> on a register of 2 or 3 qubits.
  static StateVector basis_state(int num_qubits, std::size_t index);

  /// Builds a state from explicit amplitudes; validates the register
  /// size (2 or 3 qubits), finiteness, and unit norm to kAlgebraTol.
  static StateVector from_amplitudes(int num_qubits, std::vector<cx> amps);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  cx amplitude(std::size_t index) const { return amps_[index]; }
  const std::vector<cx>& amplitudes() const { return amps_; }

  double norm_squared() const;

  /// Max entrywise |a_i - b_i| against another state of the same size.
  double max_abs_diff(const StateVector& other) const;

 private:
  StateVector(int num_qubits, std::vector<cx> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  friend StateVector apply_single_qubit(const StateVector&, const Unitary2&,
                                        Qubit);
  friend StateVector apply_controlled(const StateVector&, const Unitary2&,
                                      const std::vector<Qubit>&, Qubit);
  friend StateVector apply_entangler(const StateVector&, double);

  int num_qubits_;
  std::vector<cx> amps_;
};

//------------------------------------------------------------------------
// Gate application
//------------------------------------------------------------------------

/// Applies `gate` to `target`, identity elsewhere.
StateVector apply_single_qubit(const StateVector& state, const Unitary2& gate,
                               Qubit target);

/// Applies `gate` to `target` on the subspace where every control is |1>.
/// Controls must be nonempty, distinct, and disjoint from the target.
StateVector apply_controlled(const StateVector& state, const Unitary2& gate,
                             const std::vector<Qubit>& controls, Qubit target);

/// The entangler J(gamma) = cos(gamma/2) I + i sin(gamma/2) XX as a 4x4
/// matrix over (A, B), basis order |ab>.
Matrix4 entangler(double gamma);

/// Applies J(gamma) to qubits (A, B); identity on Q for 3-qubit states.
StateVector apply_entangler(const StateVector& state, double gamma);

//------------------------------------------------------------------------
// Circuits as gate records
//------------------------------------------------------------------------

/// A single-qubit gate with optional controls. Circuits are stored as
/// flat lists of these records plus entangler steps, mirroring the
/// circuit diagrams box for box.
struct ControlledGate {
  Unitary2 gate;
  std::vector<Qubit> controls;  // empty = plain single-qubit gate
  Qubit target;
};

struct EntanglerGate {
  double gamma;
};

using CircuitOp = std::variant<ControlledGate, EntanglerGate>;
using Circuit = std::vector<CircuitOp>;

StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

//------------------------------------------------------------------------
// Density matrices and partial trace
//------------------------------------------------------------------------

/// Two-qubit density matrix with the labels of the retained qubits in
/// register (most significant first) order.
struct DensityMatrix2 {
  Matrix4 rho;
  Qubit label_hi;
  Qubit label_lo;

  cx operator()(int row, int col) const { return rho(row, col); }

  /// Throws std::invalid_argument unless Hermitian and unit trace to
  /// kAlgebraTol with finite entries.
  void validate() const;

  double trace_real() const;
};

/// Reduced density matrix of the two qubits retained after discarding
/// `discard` from a three-qubit state. Retained labels keep their
/// register order, e.g. discarding A leaves (Q, B).
DensityMatrix2 partial_trace(const StateVector& state, Qubit discard);

}  // namespace qpd
