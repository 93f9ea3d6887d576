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
 * The enhanced-interrogation prisoners' dilemma: payoff table, the
 * quaternionic strategy set, the two- and three-qubit circuits, and
 * expected-payoff evaluation.
 *
 * Three-qubit game, register (Q, A, B) from |000>:
 *
 *   J(gamma) on (A,B)
 *   controlled exp(i*delta*X) on Q, control A
 *   Toffoli on A, controls (Q,B)
 *   controlled R(eta) on Q, control A      R(eta)|0> = cos|0> + sin|1>
 *   U_A on A, U_B on B                     (the prisoners' strategies)
 *   exact inverse of the four setup steps
 *   measure A and B; Q is marginalized
 *
 * Expected payoffs are Table-weighted over the (a,b) outcome
 * distribution with 0 -> cooperate, 1 -> defect.
 */

#pragma once

#include <array>
#include <string>

#include "qpd/quantum.hpp"

namespace qpd {

//------------------------------------------------------------------------
// Payoffs
//------------------------------------------------------------------------

struct PayoffPair {
  double alice = 0;
  double bob = 0;
};

/// Classical payoff table indexed by (alice_move, bob_move), 0=C, 1=D.
class PayoffTable {
 public:
  PayoffTable(PayoffPair cc, PayoffPair cd, PayoffPair dc, PayoffPair dd);

  /// The standard table: (C,C)->(11,9), (C,D)->(1,10), (D,C)->(10,1),
  /// (D,D)->(6,6).
  static PayoffTable standard();

  const PayoffPair& at(int alice_move, int bob_move) const {
    return entries_[2 * alice_move + bob_move];
  }

  /// True when (D,D) is the unique pure classical equilibrium and (C,C)
  /// Pareto-dominates it.
  bool has_dilemma_structure() const;

  double alice_min() const;
  double alice_max() const;
  double bob_min() const;
  double bob_max() const;

 private:
  std::array<PayoffPair, 4> entries_;
};

//------------------------------------------------------------------------
// Strategies
//------------------------------------------------------------------------

/// The four pure strategies. Labels follow the quaternionic naming of
/// the strategy set {1, i, j, k}: X, Y, Z denote the Pauli operators
/// sigma_y, sigma_z, sigma_x respectively (the unit quaternions i, j, k
/// up to global phase, which never affects payoffs). The equilibrium
/// type labels F/G/H are defined on these names.
enum class Strategy { I, X, Y, Z };

inline constexpr std::array<Strategy, 4> kStrategies = {
    Strategy::I, Strategy::X, Strategy::Y, Strategy::Z};

Unitary2 strategy_matrix(Strategy s);
char strategy_label(Strategy s);
Strategy strategy_from_label(char label);

struct StrategyProfile {
  Strategy alice = Strategy::I;
  Strategy bob = Strategy::I;

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
};

/// "IX", "ZY", ... (alice then bob).
std::string profile_label(const StrategyProfile& p);

//------------------------------------------------------------------------
// Game parameters
//------------------------------------------------------------------------

/// The interrogator's knobs. Sweeps cover gamma in [0, pi], delta and
/// eta in [0, pi/2]; values outside reduce through the gates'
/// trigonometric identities. All entries must be finite.
struct GameParams {
  double gamma = 0;
  double delta = 0;
  double eta = 0;
};

void validate_params(const GameParams& params);

//------------------------------------------------------------------------
// Circuits and evaluation
//------------------------------------------------------------------------

/// Setup gates of the three-qubit circuit, up to (not including) the
/// strategy boxes.
Circuit pre_strategy_circuit(const GameParams& params);

/// Exact inverse of pre_strategy_circuit, in reverse order.
Circuit reversal_circuit(const GameParams& params);

/// Runs the setup gates on |000>.
StateVector prepare_pre_strategy_state(const GameParams& params);

/// Closed form of the same state:
///   cos(g/2)|000> + i sin(g/2) cos(d) cos(e)|011>
///   + i sin(g/2) cos(d) sin(e)|111> - sin(g/2) sin(d)|101>.
StateVector pre_strategy_closed_form(const GameParams& params);

/// Outcome distribution P(a,b) = sum_q |amp(q,a,b)|^2, indexed 2*a+b.
std::array<double, 4> measurement_distribution(const StateVector& state);

/// Full three-qubit game: setup, strategies, exact reversal, payoffs.
PayoffPair evaluate_game(const GameParams& params, const StrategyProfile& profile,
                         const PayoffTable& table = PayoffTable::standard());

/// Two-qubit game J(gamma) -> U_A (x) U_B -> J(-gamma) from |00>.
PayoffPair baseline_evaluate(double gamma, const StrategyProfile& profile,
                             const PayoffTable& table = PayoffTable::standard());

}  // namespace qpd
