// Copyright 2026 The mirbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIRBENCH_CHANNELS_H
#define MIRBENCH_CHANNELS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mirbench/pauli.h"
#include "mirbench/random.h"
#include "mirbench/superop.h"

namespace mirbench {

/// D(X) = (1-p) X + p Tr(X) I/d on whatever register it is applied to.
struct Depolarizing {
  double p = 0.0;
};

/// Applies the non-identity Pauli with basis index k+1 with probability
/// probabilities[k]; the identity takes the remainder. probabilities.size()
/// must be 4^n_qubits - 1.
struct StochasticPauli {
  std::size_t n_qubits = 1;
  std::vector<double> probabilities;

  /// Single-qubit channel from (pX, pY, pZ).
  static StochasticPauli single_qubit(double px, double py, double pz);
};

/// Coherent error exp(-i angle/2 * axis).
struct UnitaryError {
  PauliOperator axis{1};
  double angle = 0.0;
};

/// Single-qubit amplitude damping with decay probability gamma.
struct AmplitudeDamping {
  double gamma = 0.0;
};

using ChannelParams = std::variant<Depolarizing, StochasticPauli, UnitaryError, AmplitudeDamping>;

/// Number of qubits the channel is defined on, or 0 for channels that adapt to
/// the register (depolarizing). A 1-qubit channel applied to a wider register
/// acts independently on every qubit.
std::size_t channel_arity(const ChannelParams& params);

/// Throws std::invalid_argument for probabilities outside [0,1], sums above 1,
/// or inconsistent sizes.
void validate(const ChannelParams& params);

/// True for depolarizing and stochastic Pauli channels.
bool is_pauli_channel(const ChannelParams& params);

std::string describe(const ChannelParams& params);

/// PTM of the channel on an `n_qubits` register.
SuperOp superop_of(const ChannelParams& params, std::size_t n_qubits);

/// Hilbert-Schmidt adjoint, i.e. the PTM transpose.
SuperOp dual(const SuperOp& e);

/// f(E) = (1/D) Tr(Pi_2 E), D = d^2 - 1.
double f_value(const SuperOp& e);

/// Entanglement fidelity with the identity, F = (1 + D f) / d^2.
double process_fidelity(const SuperOp& e);

/// u(E) = (1/D) Tr(Pi_2 E^dagger Pi_2 E).
double unitarity(const SuperOp& e);

/// (1/D) Tr(Pi_2 E_inv Pi_2 E): the decay rate when the inverse half of the
/// circuit sees E_inv instead of E^dagger.
double mirror_decay_rate(const SuperOp& e_inv, const SuperOp& e);

/// (1/|G|) sum_g g^-1 E g over unitary (orthogonal) PTMs.
/// Throws on an empty group or dimension mismatch.
SuperOp twirl_over_group(const SuperOp& e, std::span<const SuperOp> group);

/// PTMs of the 24 single-qubit Cliffords, in table order.
std::vector<SuperOp> single_qubit_clifford_group();

/// T_1 = twirl(E), T_{l+1} = twirl(E_inv T_l E). Throws for l < 1.
SuperOp t_sequence(const SuperOp& e, const SuperOp& e_inv, std::span<const SuperOp> group,
                   int l);
/// Same with E_inv = dual(E).
SuperOp t_sequence(const SuperOp& e, std::span<const SuperOp> group, int l);

struct FidelityBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// (1 + D u)/d^2 <= F <= (1 + D sqrt(u))/d^2. The bracket is only guaranteed
/// for stochastic Pauli channels. Throws if u is outside [0, 1].
FidelityBounds fidelity_bounds(double u, double dimension);

struct NonunitalSplit {
  SuperOp nonunital;  // Pi_2 E Pi_1
  SuperOp unital;     // Pi_2 E Pi_2
};

NonunitalSplit nonunital_split(const SuperOp& e);

/// Pi_1 + E_n + E_u^dagger: same non-unital part, dual unital part.
SuperOp inverse_half_channel(const SuperOp& e);

/// Closed-form unitarity of N parallel two-qubit depolarizing channels.
double depolarizing_tensor_unitarity(double p, int n_pairs);

/// Depolarizing p in [0, 1] whose closed-form unitarity over N pairs equals u,
/// found by bisection (u is decreasing in p). Throws for u outside [0, 1].
double depolarizing_p_for_unitarity(double u, int n_pairs);

/// Parameters of p(L) = A f u^(L-1) + B.
struct DecayLawParams {
  double a = 0.0;
  double b = 0.0;
  double f = 0.0;
  double u = 0.0;

  double survival(int length) const;
};

/// A, B for preparation |0..0> and measurement of the all-zeros outcome; f from
/// E and u from (E_inv, E).
DecayLawParams ideal_spam_decay_law(const SuperOp& e, const SuperOp& e_inv);

/// <<0..0| T |0..0>>, the survival probability of a superoperator for ideal SPAM.
double ideal_spam_survival(const SuperOp& t);

/// Random high-fidelity stochastic Pauli channel: symmetric Dirichlet(alpha)
/// weights w with identity probability 0.5 + 0.5 w_0.
StochasticPauli random_stochastic_pauli(Rng& rng, std::size_t n_qubits, double alpha = 1.0);

}  // namespace mirbench

#endif  // MIRBENCH_CHANNELS_H
