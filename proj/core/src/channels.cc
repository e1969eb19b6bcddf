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

#include "mirbench/channels.h"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mirbench/clifford.h"

namespace mirbench {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must be in [0, 1], got " + std::to_string(p));
  }
}

SuperOp depolarizing_superop(double p, std::size_t n) {
  SuperOp id = SuperOp::identity(n);
  Eigen::MatrixXd m = (1.0 - p) * id.matrix();
  m(0, 0) = 1.0;
  return SuperOp(n, std::move(m));
}

SuperOp stochastic_pauli_superop(const StochasticPauli& sp) {
  const std::size_t n = sp.n_qubits;
  const std::uint64_t s = std::uint64_t{1} << (2 * n);
  const double p_identity =
      1.0 - std::accumulate(sp.probabilities.begin(), sp.probabilities.end(), 0.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
  for (std::uint64_t i = 0; i < s; ++i) {
    const PauliOperator pi = PauliOperator::from_index(n, i);
    double diag = p_identity;
    for (std::uint64_t k = 1; k < s; ++k) {
      const bool commute = pi.commutes_with(PauliOperator::from_index(n, k));
      diag += (commute ? 1.0 : -1.0) * sp.probabilities[k - 1];
    }
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag;
  }
  return SuperOp(n, std::move(m));
}

SuperOp unitary_error_superop(const UnitaryError& ue) {
  const Eigen::MatrixXcd p = dense_pauli(ue.axis.letters_only());
  const auto d = p.rows();
  const Eigen::MatrixXcd u = std::cos(ue.angle / 2) * Eigen::MatrixXcd::Identity(d, d) -
                             std::complex<double>(0.0, std::sin(ue.angle / 2)) * p;
  return superop_of_unitary(u);
}

SuperOp amplitude_damping_superop(double gamma) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  const double s = std::sqrt(1.0 - gamma);
  m(0, 0) = 1.0;
  m(1, 1) = s;
  m(2, 2) = s;
  m(3, 3) = 1.0 - gamma;
  m(3, 0) = gamma;
  return SuperOp(1, std::move(m));
}

SuperOp native_superop(const ChannelParams& params) {
  return std::visit(Overloaded{
                        [](const Depolarizing&) -> SuperOp {
                          throw std::logic_error("depolarizing has no native arity");
                        },
                        [](const StochasticPauli& sp) { return stochastic_pauli_superop(sp); },
                        [](const UnitaryError& ue) { return unitary_error_superop(ue); },
                        [](const AmplitudeDamping& ad) { return amplitude_damping_superop(ad.gamma); },
                    },
                    params);
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

StochasticPauli StochasticPauli::single_qubit(double px, double py, double pz) {
  return StochasticPauli{1, {px, py, pz}};
}

std::size_t channel_arity(const ChannelParams& params) {
  return std::visit(Overloaded{
                        [](const Depolarizing&) -> std::size_t { return 0; },
                        [](const StochasticPauli& sp) { return sp.n_qubits; },
                        [](const UnitaryError& ue) { return ue.axis.n_qubits(); },
                        [](const AmplitudeDamping&) -> std::size_t { return 1; },
                    },
                    params);
}

void validate(const ChannelParams& params) {
  std::visit(Overloaded{
                 [](const Depolarizing& d) { check_probability(d.p, "depolarizing p"); },
                 [](const StochasticPauli& sp) {
                   if (sp.n_qubits == 0 || sp.n_qubits > kMaxSuperOpQubits) {
                     throw std::invalid_argument("stochastic Pauli: unsupported qubit count");
                   }
                   const std::size_t expected = (std::size_t{1} << (2 * sp.n_qubits)) - 1;
                   if (sp.probabilities.size() != expected) {
                     throw std::invalid_argument("stochastic Pauli: expected " +
                                                 std::to_string(expected) + " probabilities");
                   }
                   double total = 0.0;
                   for (double p : sp.probabilities) {
                     check_probability(p, "stochastic Pauli probability");
                     total += p;
                   }
                   if (total > 1.0 + 1e-12) {
                     throw std::invalid_argument("stochastic Pauli: probabilities sum above 1");
                   }
                 },
                 [](const UnitaryError& ue) {
                   if (!std::isfinite(ue.angle)) throw std::invalid_argument("unitary error: angle must be finite");
                   if (ue.axis.n_qubits() > kMaxSuperOpQubits) {
                     throw std::invalid_argument("unitary error: axis too wide");
                   }
                 },
                 [](const AmplitudeDamping& ad) { check_probability(ad.gamma, "amplitude damping gamma"); },
             },
             params);
}

bool is_pauli_channel(const ChannelParams& params) {
  return std::holds_alternative<Depolarizing>(params) ||
         std::holds_alternative<StochasticPauli>(params);
}

std::string describe(const ChannelParams& params) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const Depolarizing& d) { out << "depolarizing(p=" << d.p << ")"; },
                 [&](const StochasticPauli& sp) {
                   out << "pauli(n=" << sp.n_qubits << ";";
                   for (std::size_t k = 0; k < sp.probabilities.size(); ++k) {
                     out << (k ? "," : "") << sp.probabilities[k];
                   }
                   out << ")";
                 },
                 [&](const UnitaryError& ue) {
                   out << "unitary(axis=" << ue.axis.str() << ",angle=" << ue.angle << ")";
                 },
                 [&](const AmplitudeDamping& ad) { out << "amp_damp(gamma=" << ad.gamma << ")"; },
             },
             params);
  return out.str();
}

SuperOp superop_of(const ChannelParams& params, std::size_t n_qubits) {
  validate(params);
  if (const auto* d = std::get_if<Depolarizing>(&params)) return depolarizing_superop(d->p, n_qubits);
  const std::size_t arity = channel_arity(params);
  if (arity == n_qubits) return native_superop(params);
  if (arity == 1) {
    const SuperOp local = native_superop(params);
    SuperOp out = local;
    for (std::size_t q = 1; q < n_qubits; ++q) out = tensor(out, local);
    return out;
  }
  throw std::invalid_argument("superop_of: " + describe(params) + " cannot act on " +
                              std::to_string(n_qubits) + " qubits");
}

SuperOp dual(const SuperOp& e) { return SuperOp(e.n_qubits(), e.matrix().transpose()); }

double f_value(const SuperOp& e) {
  const double big_d = static_cast<double>(e.size() - 1);
  return (e.matrix().trace() - e(0, 0)) / big_d;
}

double process_fidelity(const SuperOp& e) {
  const double d2 = static_cast<double>(e.size());
  return (1.0 + (d2 - 1.0) * f_value(e)) / d2;
}

double unitarity(const SuperOp& e) { return mirror_decay_rate(dual(e), e); }

double mirror_decay_rate(const SuperOp& e_inv, const SuperOp& e) {
  const auto s = static_cast<Eigen::Index>(e.size());
  if (e_inv.n_qubits() != e.n_qubits()) throw std::invalid_argument("mirror_decay_rate: dimension mismatch");
  // Tr(Pi_2 A Pi_2 B) = sum_{i,j>0} A_ij B_ji.
  const auto a = e_inv.matrix().bottomRightCorner(s - 1, s - 1);
  const auto b = e.matrix().bottomRightCorner(s - 1, s - 1);
  return a.cwiseProduct(b.transpose()).sum() / static_cast<double>(s - 1);
}

SuperOp twirl_over_group(const SuperOp& e, std::span<const SuperOp> group) {
  if (group.empty()) throw std::invalid_argument("twirl_over_group: empty group");
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(e.matrix().rows(), e.matrix().cols());
  for (const SuperOp& g : group) {
    if (g.n_qubits() != e.n_qubits()) throw std::invalid_argument("twirl_over_group: dimension mismatch");
    acc.noalias() += g.matrix().transpose() * e.matrix() * g.matrix();
  }
  return SuperOp(e.n_qubits(), acc / static_cast<double>(group.size()));
}

std::vector<SuperOp> single_qubit_clifford_group() {
  std::vector<SuperOp> group;
  group.reserve(kNumSingleQubitCliffords);
  for (int k = 0; k < kNumSingleQubitCliffords; ++k) {
    const Matrix2c& m = SingleQubitClifford(k).matrix();
    Eigen::Matrix2cd u;
    u << m[0], m[1], m[2], m[3];
    group.push_back(superop_of_unitary(u));
  }
  return group;
}

SuperOp t_sequence(const SuperOp& e, const SuperOp& e_inv, std::span<const SuperOp> group, int l) {
  if (l < 1) throw std::invalid_argument("t_sequence: l must be >= 1");
  SuperOp t = twirl_over_group(e, group);
  for (int k = 1; k < l; ++k) t = twirl_over_group(e_inv * t * e, group);
  return t;
}

SuperOp t_sequence(const SuperOp& e, std::span<const SuperOp> group, int l) {
  return t_sequence(e, dual(e), group, l);
}

FidelityBounds fidelity_bounds(double u, double dimension) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("fidelity_bounds: u must be in [0, 1]");
  if (!(dimension >= 2.0)) throw std::invalid_argument("fidelity_bounds: dimension must be >= 2");
  const double d2 = dimension * dimension;
  const double big_d = d2 - 1.0;
  return {(1.0 + big_d * u) / d2, (1.0 + big_d * std::sqrt(u)) / d2};
}

NonunitalSplit nonunital_split(const SuperOp& e) {
  const SuperOp pi1 = projector_identity(e.n_qubits());
  const SuperOp pi2 = projector_traceless(e.n_qubits());
  return {pi2 * e * pi1, pi2 * e * pi2};
}

SuperOp inverse_half_channel(const SuperOp& e) {
  const NonunitalSplit split = nonunital_split(e);
  return projector_identity(e.n_qubits()) + split.nonunital + dual(split.unital);
}

double depolarizing_tensor_unitarity(double p, int n_pairs) {
  check_probability(p, "depolarizing p");
  if (n_pairs < 1) throw std::invalid_argument("depolarizing_tensor_unitarity: N must be >= 1");
  const int n = n_pairs;
  double total = 0.0;
  for (int w = 1; w <= n; ++w) {
    double inner = 0.0;
    for (int j = 0; j <= n - w; ++j) {
      inner += binomial(n - w, j) * std::pow(1.0 - p, n - j) * std::pow(p, j);
    }
    total += std::pow(15.0, w) * binomial(n, w) * inner * inner;
  }
  return total / (std::pow(16.0, n) - 1.0);
}

double depolarizing_p_for_unitarity(double u, int n_pairs) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("depolarizing_p_for_unitarity: u must be in [0, 1]");
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (depolarizing_tensor_unitarity(mid, n_pairs) > u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double DecayLawParams::survival(int length) const {
  return a * f * std::pow(u, length - 1) + b;
}

double ideal_spam_survival(const SuperOp& t) {
  // |0..0><0..0| has Tr(P rho) = 1 exactly for Z-type Paulis; the effect is the
  // same projector, so <<E|T|rho>> = (1/d) sum_{i,j Z-type} T_ij.
  const std::size_t n = t.n_qubits();
  const std::uint64_t s = t.size();
  std::vector<Eigen::Index> z_type;
  for (std::uint64_t i = 0; i < s; ++i) {
    if (PauliOperator::from_index(n, i).x_bits() == 0) z_type.push_back(static_cast<Eigen::Index>(i));
  }
  double acc = 0.0;
  for (Eigen::Index i : z_type) {
    for (Eigen::Index j : z_type) acc += t(i, j);
  }
  return acc / static_cast<double>(t.dim());
}

DecayLawParams ideal_spam_decay_law(const SuperOp& e, const SuperOp& e_inv) {
  const std::size_t n = e.n_qubits();
  DecayLawParams law;
  law.b = ideal_spam_survival(projector_identity(n));
  law.a = ideal_spam_survival(projector_traceless(n));
  law.f = f_value(e);
  law.u = mirror_decay_rate(e_inv, e);
  return law;
}

StochasticPauli random_stochastic_pauli(Rng& rng, std::size_t n_qubits, double alpha) {
  const std::size_t s = std::size_t{1} << (2 * n_qubits);
  std::gamma_distribution<double> gamma(alpha, 1.0);
  std::vector<double> w(s);
  double total = 0.0;
  for (double& x : w) {
    x = gamma(rng);
    total += x;
  }
  StochasticPauli sp{n_qubits, {}};
  sp.probabilities.reserve(s - 1);
  for (std::size_t k = 1; k < s; ++k) sp.probabilities.push_back(0.5 * w[k] / total);
  return sp;
}

}  // namespace mirbench
