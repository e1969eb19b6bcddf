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

#include <cmath>

#include <gtest/gtest.h>

#include "mirbench/channels.h"
#include "mirbench/circuit.h"
#include "mirbench/superop.h"
#include "oracle.h"

namespace mirbench {
namespace {

using oracle::cd;
using oracle::Mat;

constexpr double kTol = 1e-10;

double max_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

Eigen::MatrixXd real_kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// Unitarity straight from its entrywise definition.
double unitarity_oracle(const Eigen::MatrixXd& m) {
  const Eigen::Index s = m.rows();
  return m.bottomRightCorner(s - 1, s - 1).squaredNorm() / static_cast<double>(s - 1);
}

std::vector<Mat> depolarizing_kraus(double p, std::size_t n) {
  const std::uint64_t s = std::uint64_t{1} << (2 * n);
  std::vector<Mat> k;
  const auto d = Eigen::Index{1} << n;
  k.push_back(std::sqrt(1.0 - p) * Mat::Identity(d, d));
  for (std::uint64_t i = 0; i < s; ++i) {
    k.push_back(std::sqrt(p / static_cast<double>(s)) * oracle::pauli_matrix(PauliOperator::from_index(n, i)));
  }
  return k;
}

Mat rotation(char axis, double theta) {
  return std::cos(theta / 2) * Mat::Identity(2, 2) - cd(0, 1) * std::sin(theta / 2) * oracle::letter_matrix(axis);
}

TEST(SuperopOf, IdentityChannels) {
  EXPECT_LT(superop_of(Depolarizing{0.0}, 2).max_abs_diff(SuperOp::identity(2)), kTol);
  EXPECT_LT(superop_of(StochasticPauli::single_qubit(0, 0, 0), 1).max_abs_diff(SuperOp::identity(1)), kTol);
  EXPECT_LT(superop_of(UnitaryError{PauliOperator::from_string("X"), 0.0}, 1).max_abs_diff(SuperOp::identity(1)), kTol);
}

TEST(SuperopOf, DepolarizingMatchesKrausOracle) {
  for (std::size_t n : {1u, 2u}) {
    for (double p : {0.0, 0.01, 0.3, 1.0}) {
      const SuperOp e = superop_of(Depolarizing{p}, n);
      EXPECT_LT(max_diff(e.matrix(), oracle::ptm(depolarizing_kraus(p, n), n)), kTol);
      EXPECT_TRUE(e.is_trace_preserving());
    }
  }
  const SuperOp e = superop_of(Depolarizing{0.01}, 1);
  Eigen::Vector4d diag(1, 0.99, 0.99, 0.99);
  EXPECT_LT(max_diff(e.matrix(), diag.asDiagonal().toDenseMatrix()), kTol);
}

TEST(SuperopOf, ZRotationIsBlockRotation) {
  const double theta = 0.37;
  const SuperOp e = superop_of(UnitaryError{PauliOperator::from_string("Z"), theta}, 1);
  EXPECT_LT(max_diff(e.matrix(), oracle::ptm({rotation('Z', theta)}, 1)), kTol);
  EXPECT_NEAR(e(0, 0), 1.0, kTol);
  EXPECT_NEAR(e(3, 3), 1.0, kTol);
  EXPECT_NEAR(e(1, 1), std::cos(theta), kTol);
  EXPECT_NEAR(e(2, 2), std::cos(theta), kTol);
  EXPECT_NEAR(std::abs(e(1, 2)), std::sin(theta), kTol);
}

TEST(SuperopOf, AmplitudeDampingMatchesKrausOracle) {
  const double g = 0.1;
  Mat k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1 - g);
  k1 << 0, std::sqrt(g), 0, 0;
  const SuperOp e = superop_of(AmplitudeDamping{g}, 1);
  EXPECT_LT(max_diff(e.matrix(), oracle::ptm({k0, k1}, 1)), kTol);
  EXPECT_TRUE(e.is_trace_preserving());
  EXPECT_FALSE(e.is_unital());
}

TEST(SuperopOf, TwoQubitStochasticPauliMatchesKrausOracle) {
  Rng rng(4);
  const StochasticPauli sp = random_stochastic_pauli(rng, 2);
  std::vector<Mat> kraus;
  double rest = 1.0;
  for (std::size_t k = 0; k < sp.probabilities.size(); ++k) {
    rest -= sp.probabilities[k];
    kraus.push_back(std::sqrt(sp.probabilities[k]) * oracle::pauli_matrix(PauliOperator::from_index(2, k + 1)));
  }
  kraus.push_back(std::sqrt(rest) * Mat::Identity(4, 4));
  EXPECT_LT(max_diff(superop_of(sp, 2).matrix(), oracle::ptm(kraus, 2)), kTol);
}

TEST(SuperopOf, SingleQubitChannelTensoredOverRegister) {
  const SuperOp one = superop_of(AmplitudeDamping{0.2}, 1);
  const SuperOp two = superop_of(AmplitudeDamping{0.2}, 2);
  EXPECT_LT(max_diff(two.matrix(), real_kron(one.matrix(), one.matrix())), kTol);
}

TEST(SuperopOfUnitary, MatchesOracleForLayer) {
  Rng rng(9);
  const std::vector<Gate> gates = layer_gates(sample_layer(rng, 2));
  const Mat u = oracle::circuit_matrix(gates, 2);
  EXPECT_LT(max_diff(superop_of_unitary(u).matrix(), oracle::ptm({u}, 2)), kTol);
}

TEST(SuperopOf, InvalidParametersThrow) {
  EXPECT_THROW(superop_of(Depolarizing{1.5}, 1), std::invalid_argument);
  EXPECT_THROW(superop_of(Depolarizing{-0.1}, 1), std::invalid_argument);
  EXPECT_THROW(superop_of(StochasticPauli::single_qubit(0.6, 0.6, 0.0), 1), std::invalid_argument);
  EXPECT_THROW(superop_of(StochasticPauli{1, {0.1}}, 1), std::invalid_argument);
  EXPECT_THROW(superop_of(AmplitudeDamping{2.0}, 1), std::invalid_argument);
}

TEST(Dual, StochasticPauliSelfDual) {
  const SuperOp e = superop_of(StochasticPauli::single_qubit(0.01, 0.02, 0.03), 1);
  EXPECT_LT(dual(e).max_abs_diff(e), kTol);
}

TEST(Dual, UnitaryDualIsInverse) {
  const SuperOp e = superop_of(UnitaryError{PauliOperator::from_string("Y"), 0.8}, 1);
  EXPECT_LT((dual(e) * e).max_abs_diff(SuperOp::identity(1)), kTol);
}

TEST(Dual, AmplitudeDampingDualNotTracePreserving) {
  const SuperOp e = superop_of(AmplitudeDamping{0.1}, 1);
  const SuperOp d = dual(e);
  EXPECT_FALSE(d.is_trace_preserving());
  EXPECT_NEAR(d(0, 3), 0.1, kTol);
  EXPECT_LT(max_diff(d.matrix(), e.matrix().transpose()), kTol);
}

TEST(Fidelity, Examples) {
  EXPECT_NEAR(f_value(SuperOp::identity(1)), 1.0, kTol);
  EXPECT_NEAR(process_fidelity(SuperOp::identity(2)), 1.0, kTol);
  const SuperOp e = superop_of(Depolarizing{0.01}, 1);
  EXPECT_NEAR(f_value(e), 0.99, kTol);
  EXPECT_NEAR(process_fidelity(e), 0.9925, kTol);
  for (std::size_t n : {1u, 2u}) {
    const SuperOp full = superop_of(Depolarizing{1.0}, n);
    const double d = static_cast<double>(std::size_t{1} << n);
    EXPECT_NEAR(f_value(full), 0.0, kTol);
    EXPECT_NEAR(process_fidelity(full), 1.0 / (d * d), kTol);
  }
}

TEST(Fidelity, ProcessFidelityMatchesEntanglementFidelity) {
  // F = |Tr U|^2 / d^2 for a unitary channel.
  const double theta = 0.5;
  const SuperOp e = superop_of(UnitaryError{PauliOperator::from_string("X"), theta}, 1);
  EXPECT_NEAR(process_fidelity(e), std::norm(rotation('X', theta).trace()) / 4.0, kTol);
}

TEST(Unitarity, Examples) {
  EXPECT_NEAR(unitarity(superop_of(UnitaryError{PauliOperator::from_string("ZX"), 1.1}, 2)), 1.0, kTol);
  const SuperOp e = superop_of(Depolarizing{0.01}, 1);
  EXPECT_NEAR(unitarity(e), 0.9801, kTol);
  EXPECT_NEAR(unitarity(e), f_value(e) * f_value(e), kTol);
  for (double theta : {0.0, 0.3, 1.0, 2.5, M_PI}) {
    EXPECT_NEAR(unitarity(superop_of(UnitaryError{PauliOperator::from_string("Z"), theta}, 1)), 1.0, kTol);
  }
  const SuperOp ad = superop_of(AmplitudeDamping{0.3}, 1);
  EXPECT_NEAR(unitarity(ad), unitarity_oracle(ad.matrix()), kTol);
}

TEST(Twirl, CliffordTwirlIsDepolarizing) {
  const std::vector<SuperOp> group = single_qubit_clifford_group();
  ASSERT_EQ(group.size(), 24u);
  Rng rng(21);
  const std::vector<SuperOp> channels = {
      superop_of(AmplitudeDamping{0.3}, 1), superop_of(UnitaryError{PauliOperator::from_string("Y"), 0.7}, 1),
      superop_of(random_stochastic_pauli(rng, 1), 1), superop_of(StochasticPauli::single_qubit(0.1, 0.0, 0.2), 1)};
  for (const SuperOp& e : channels) {
    const SuperOp t = twirl_over_group(e, group);
    const SuperOp expected = projector_identity(1) + f_value(e) * projector_traceless(1);
    EXPECT_LT(t.max_abs_diff(expected), kTol);
    EXPECT_LT(twirl_over_group(t, group).max_abs_diff(t), 1e-12);
    for (const SuperOp& g : group) EXPECT_LT((g * t).max_abs_diff(t * g), 1e-12);
    EXPECT_TRUE(t.is_trace_preserving());
  }
}

TEST(Twirl, ZRotationFidelity) {
  const double theta = 0.9;
  const SuperOp e = superop_of(UnitaryError{PauliOperator::from_string("Z"), theta}, 1);
  const SuperOp t = twirl_over_group(e, single_qubit_clifford_group());
  EXPECT_NEAR(t(1, 1), (1 + 2 * std::cos(theta)) / 3, kTol);
  EXPECT_NEAR(f_value(t), (1 + 2 * std::cos(theta)) / 3, kTol);
}

TEST(Twirl, IdentityAndErrors) {
  const auto group = single_qubit_clifford_group();
  EXPECT_LT(twirl_over_group(SuperOp::identity(1), group).max_abs_diff(SuperOp::identity(1)), kTol);
  EXPECT_THROW(twirl_over_group(SuperOp::identity(1), std::span<const SuperOp>{}), std::invalid_argument);
  EXPECT_THROW(twirl_over_group(SuperOp::identity(2), group), std::invalid_argument);
}

TEST(TSequence, IdentityChannel) {
  const auto group = single_qubit_clifford_group();
  for (int l = 1; l <= 4; ++l) {
    EXPECT_LT(t_sequence(SuperOp::identity(1), group, l).max_abs_diff(SuperOp::identity(1)), kTol);
  }
  EXPECT_THROW(t_sequence(SuperOp::identity(1), group, 0), std::invalid_argument);
}

TEST(TSequence, DepolarizingClosedForm) {
  const auto group = single_qubit_clifford_group();
  const double f = 0.97;
  const SuperOp e = superop_of(Depolarizing{1 - f}, 1);
  for (int l = 1; l <= 8; ++l) {
    const SuperOp expected = projector_identity(1) + std::pow(f, 2 * l - 1) * projector_traceless(1);
    EXPECT_LT(t_sequence(e, group, l).max_abs_diff(expected), kTol);
  }
}

TEST(TSequence, UnitalChannelsFollowLemma) {
  const auto group = single_qubit_clifford_group();
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const SuperOp e = superop_of(random_stochastic_pauli(rng, 1), 1);
    const double f = f_value(e), u = unitarity(e);
    for (int l = 1; l <= 8; ++l) {
      const SuperOp expected = projector_identity(1) + f * std::pow(u, l - 1) * projector_traceless(1);
      ASSERT_LT(t_sequence(e, group, l).max_abs_diff(expected), kTol);
    }
  }
  const SuperOp coherent = superop_of(UnitaryError{PauliOperator::from_string("X"), 0.2}, 1);
  for (int l = 1; l <= 8; ++l) {
    const SuperOp expected = projector_identity(1) + f_value(coherent) * projector_traceless(1);
    EXPECT_LT(t_sequence(coherent, group, l).max_abs_diff(expected), kTol);
  }
}

TEST(TSequence, ArbitraryInverseChannel) {
  const auto group = single_qubit_clifford_group();
  const SuperOp e = superop_of(StochasticPauli::single_qubit(0.02, 0.01, 0.03), 1);
  const SuperOp e_inv = superop_of(UnitaryError{PauliOperator::from_string("Z"), 0.3}, 1) *
                        superop_of(Depolarizing{0.05}, 1);
  const Eigen::MatrixXd p2 = projector_traceless(1).matrix();
  const double middle = (p2 * e_inv.matrix() * p2 * e.matrix()).trace() / 3.0;
  EXPECT_NEAR(mirror_decay_rate(e_inv, e), middle, kTol);
  for (int l = 1; l <= 8; ++l) {
    const SuperOp expected = projector_identity(1) + f_value(e) * std::pow(middle, l - 1) * projector_traceless(1);
    EXPECT_LT(t_sequence(e, e_inv, group, l).max_abs_diff(expected), kTol);
  }
}

TEST(DecayLaw, IdealSpamMatchesRecursion) {
  const auto group = single_qubit_clifford_group();
  Rng rng(41);
  const SuperOp e = superop_of(random_stochastic_pauli(rng, 1), 1);
  const DecayLawParams law = ideal_spam_decay_law(e, dual(e));
  EXPECT_NEAR(law.b, 0.5, kTol);
  EXPECT_NEAR(law.a, 0.5, kTol);
  for (int l = 1; l <= 8; ++l) EXPECT_NEAR(ideal_spam_survival(t_sequence(e, group, l)), law.survival(l), kTol);
}

TEST(FidelityBounds, PaperValues) {
  const FidelityBounds b = fidelity_bounds(0.938, std::pow(2.0, 10));
  EXPECT_NEAR(b.lower, 0.938, 5e-4);
  EXPECT_NEAR(b.upper, 0.969, 5e-4);
  const FidelityBounds one = fidelity_bounds(1.0, 4);
  EXPECT_NEAR(one.lower, 1.0, kTol);
  EXPECT_NEAR(one.upper, 1.0, kTol);
  EXPECT_THROW(fidelity_bounds(1.2, 2), std::invalid_argument);
  EXPECT_THROW(fidelity_bounds(-0.1, 2), std::invalid_argument);
}

TEST(FidelityBounds, BracketRandomStochasticPauli) {
  Rng rng(51);
  for (int t = 0; t < 1000; ++t) {
    const SuperOp e = superop_of(random_stochastic_pauli(rng, 1), 1);
    const FidelityBounds b = fidelity_bounds(unitarity(e), 2);
    const double f = process_fidelity(e);
    ASSERT_LE(b.lower, f + 1e-12);
    ASSERT_LE(f, b.upper + 1e-12);
  }
}

TEST(FidelityBounds, SaturationCases) {
  for (double p : {0.0, 0.01, 0.2, 0.7}) {
    const SuperOp e = superop_of(Depolarizing{p}, 1);
    EXPECT_NEAR(fidelity_bounds(unitarity(e), 2).upper, process_fidelity(e), kTol);
  }
  // Diagonal entries in {0, 1}: u = f, the lower bound is tight.
  const SuperOp dephase = superop_of(StochasticPauli::single_qubit(0, 0, 0.5), 1);
  EXPECT_NEAR(fidelity_bounds(unitarity(dephase), 2).lower, process_fidelity(dephase), kTol);
}

TEST(NonunitalSplit, UnitalChannel) {
  const SuperOp e = superop_of(UnitaryError{PauliOperator::from_string("X"), 0.4}, 1) *
                    superop_of(Depolarizing{0.1}, 1);
  const NonunitalSplit s = nonunital_split(e);
  EXPECT_LT(s.nonunital.matrix().cwiseAbs().maxCoeff(), kTol);
  EXPECT_LT(inverse_half_channel(e).max_abs_diff(dual(e)), kTol);
}

TEST(NonunitalSplit, AmplitudeDamping) {
  const double g = 0.1;
  const SuperOp e = superop_of(AmplitudeDamping{g}, 1);
  const NonunitalSplit s = nonunital_split(e);
  Eigen::MatrixXd en = Eigen::MatrixXd::Zero(4, 4);
  en(3, 0) = g;
  EXPECT_LT(max_diff(s.nonunital.matrix(), en), kTol);
  EXPECT_LT((projector_identity(1) + s.nonunital + s.unital).max_abs_diff(e), kTol);
  const SuperOp e_prime = inverse_half_channel(e);
  EXPECT_NEAR(e_prime(3, 0), g, kTol);
  EXPECT_NEAR(e_prime(0, 3), 0.0, kTol);
  EXPECT_TRUE(e_prime.is_trace_preserving());
  EXPECT_LT(max_diff(s.unital.matrix().transpose(), nonunital_split(e_prime).unital.matrix()), kTol);
}

TEST(NonunitalSplit, InverseHalfDecay) {
  const auto group = single_qubit_clifford_group();
  const SuperOp e = superop_of(UnitaryError{PauliOperator::from_string("Y"), 0.3}, 1) *
                    superop_of(AmplitudeDamping{0.05}, 1);
  const SuperOp e_prime = inverse_half_channel(e);
  const double m = mirror_decay_rate(e_prime, e);
  for (int l = 1; l <= 8; ++l) {
    const SuperOp expected = projector_identity(1) + f_value(e) * std::pow(m, l - 1) * projector_traceless(1);
    EXPECT_LT(t_sequence(e, e_prime, group, l).max_abs_diff(expected), kTol);
  }
}

TEST(DepolarizingTensorUnitarity, SpotValues) {
  for (int n : {1, 2, 3, 5}) EXPECT_NEAR(depolarizing_tensor_unitarity(0.0, n), 1.0, kTol);
  EXPECT_NEAR(depolarizing_tensor_unitarity(0.01, 1), 0.9801, kTol);
  const double q = 0.99 * 0.99;
  EXPECT_NEAR(depolarizing_tensor_unitarity(0.01, 2), (30 * q + 225 * q * q) / 255, kTol);
  EXPECT_NEAR(depolarizing_tensor_unitarity(0.01, 2), 0.9628906, 5e-8);
  for (double p : {0.0, 0.3, 1.0}) EXPECT_NEAR(depolarizing_tensor_unitarity(p, 1), (1 - p) * (1 - p), kTol);
}

TEST(DepolarizingTensorUnitarity, AgreesWithPtm) {
  for (double p : {0.0, 0.001, 0.01, 0.1, 1.0}) {
    const Eigen::MatrixXd one = oracle::ptm(depolarizing_kraus(p, 2), 2);
    EXPECT_NEAR(depolarizing_tensor_unitarity(p, 1), unitarity_oracle(one), kTol);
    EXPECT_NEAR(depolarizing_tensor_unitarity(p, 2), unitarity_oracle(real_kron(one, one)), kTol);
    const SuperOp d = superop_of(Depolarizing{p}, 2);
    EXPECT_NEAR(depolarizing_tensor_unitarity(p, 2), unitarity(tensor(d, d)), kTol);
  }
}

TEST(DepolarizingTensorUnitarity, InverseSolve) {
  for (int n : {1, 3, 5}) {
    for (double u : {0.938, 0.962, 0.99}) {
      const double p = depolarizing_p_for_unitarity(u, n);
      EXPECT_NEAR(depolarizing_tensor_unitarity(p, n), u, 1e-12);
    }
  }
  EXPECT_THROW(depolarizing_p_for_unitarity(1.5, 2), std::invalid_argument);
}

TEST(RandomStochasticPauli, HighFidelityRegime) {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const StochasticPauli sp = random_stochastic_pauli(rng, 1);
    ASSERT_EQ(sp.probabilities.size(), 3u);
    double total = 0.0;
    for (double p : sp.probabilities) {
      EXPECT_GE(p, 0.0);
      total += p;
    }
    EXPECT_LE(total, 0.5 + 1e-12);
    EXPECT_NO_THROW(validate(ChannelParams{sp}));
  }
}

TEST(Channels, DescribeAndArity) {
  EXPECT_EQ(channel_arity(Depolarizing{0.1}), 0u);
  EXPECT_EQ(channel_arity(AmplitudeDamping{0.1}), 1u);
  EXPECT_EQ(channel_arity(StochasticPauli{2, std::vector<double>(15, 0.0)}), 2u);
  EXPECT_TRUE(is_pauli_channel(Depolarizing{0.1}));
  EXPECT_FALSE(is_pauli_channel(AmplitudeDamping{0.1}));
  EXPECT_FALSE(describe(Depolarizing{0.1}).empty());
}

}  // namespace
}  // namespace mirbench
