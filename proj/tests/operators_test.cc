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

#include <array>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "mirbench/circuit.h"
#include "mirbench/clifford.h"
#include "mirbench/native_gate.h"
#include "mirbench/pauli.h"
#include "mirbench/random.h"
#include "mirbench/tableau.h"
#include "oracle.h"

namespace mirbench {
namespace {

using oracle::Mat;

std::vector<PauliOperator> all_paulis(std::size_t n) {
  std::vector<PauliOperator> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * n)); ++i) out.push_back(PauliOperator::from_index(n, i));
  return out;
}

std::vector<PauliOperator> all_signed_paulis(std::size_t n) {
  std::vector<PauliOperator> out;
  for (const PauliOperator& p : all_paulis(n)) {
    for (int k = 0; k < 4; ++k) {
      PauliOperator q = p;
      q.add_phase(k);
      out.push_back(q);
    }
  }
  return out;
}

TEST(PauliOperator, IdentityAndParsing) {
  const PauliOperator id(3);
  EXPECT_TRUE(id.is_identity_letters());
  EXPECT_EQ(id.phase(), Phase::kPlusOne);
  EXPECT_EQ(PauliOperator::from_string("III"), id);
  EXPECT_EQ(PauliOperator::from_string("_I_"), id);
  const PauliOperator p = PauliOperator::from_string("-iXYZ");
  EXPECT_EQ(p.letter(0), PauliLetter::X);
  EXPECT_EQ(p.letter(1), PauliLetter::Y);
  EXPECT_EQ(p.letter(2), PauliLetter::Z);
  EXPECT_EQ(p.phase(), Phase::kMinusI);
  EXPECT_EQ(PauliOperator::from_string(p.str()), p);
  EXPECT_THROW(PauliOperator::from_string("XQ"), std::invalid_argument);
}

TEST(PauliOperator, IndexRoundTrip) {
  for (std::uint64_t i = 0; i < 256; ++i) EXPECT_EQ(PauliOperator::from_index(4, i).index(), i);
  EXPECT_EQ(PauliOperator::from_string("Y").index(), 2u);
  EXPECT_EQ(PauliOperator::from_string("IZ").index(), 12u);
}

TEST(PauliMultiply, SelfInverse) {
  const PauliOperator x = PauliOperator::from_string("X");
  EXPECT_EQ(x * x, PauliOperator(1));
}

TEST(PauliMultiply, XTimesZIsMinusIY) {
  const PauliOperator r = PauliOperator::from_string("X") * PauliOperator::from_string("Z");
  EXPECT_EQ(r, PauliOperator::from_string("-iY"));
  const Mat oracle_product = oracle::letter_matrix('X') * oracle::letter_matrix('Z');
  EXPECT_LT((oracle::pauli_matrix(r) - oracle_product).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PauliMultiply, TwoQubitExample) {
  const PauliOperator r = PauliOperator::from_string("XI") * PauliOperator::from_string("ZZ");
  EXPECT_EQ(r, PauliOperator::from_string("-iYZ"));
  const Mat expected = oracle::pauli_matrix(PauliOperator::from_string("XI")) *
                       oracle::pauli_matrix(PauliOperator::from_string("ZZ"));
  EXPECT_LT((oracle::pauli_matrix(r) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PauliMultiply, ExhaustiveTwoQubitMatrixOracle) {
  const auto paulis = all_signed_paulis(2);
  for (const PauliOperator& p : paulis) {
    for (const PauliOperator& q : paulis) {
      const Mat expected = oracle::pauli_matrix(p) * oracle::pauli_matrix(q);
      ASSERT_LT((oracle::pauli_matrix(p * q) - expected).cwiseAbs().maxCoeff(), 1e-12) << p.str() << " " << q.str();
    }
  }
}

TEST(PauliMultiply, InverseGivesIdentity) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    PauliOperator p = sample_pauli(rng, 7);
    p.add_phase(static_cast<int>(uniform_index(rng, 4)));
    PauliOperator inv = p;
    inv.add_phase(static_cast<int>((4 - 2 * static_cast<int>(p.phase())) % 4));
    const PauliOperator prod = p * inv;
    EXPECT_TRUE(prod.is_identity_letters());
    EXPECT_EQ(prod.phase(), Phase::kPlusOne);
  }
}

TEST(PauliMultiply, MismatchedWidthThrows) {
  EXPECT_THROW(PauliOperator(2) * PauliOperator(3), std::invalid_argument);
}

TEST(PauliOperator, CommutationMatchesMatrices) {
  for (const PauliOperator& p : all_paulis(2)) {
    for (const PauliOperator& q : all_paulis(2)) {
      const Mat a = oracle::pauli_matrix(p), b = oracle::pauli_matrix(q);
      EXPECT_EQ(p.commutes_with(q), (a * b - b * a).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST(SingleQubitClifford, TableMatchesWordMatrices) {
  std::set<int> seen;
  for (int k = 0; k < kNumSingleQubitCliffords; ++k) {
    const SingleQubitClifford c(k);
    const Mat u = oracle::word_matrix(c.word());
    const Mat& stored = Eigen::Map<const Eigen::Matrix<std::complex<double>, 2, 2, Eigen::RowMajor>>(c.matrix().data());
    EXPECT_LT((u - stored).cwiseAbs().maxCoeff(), 1e-12) << k;
    for (char letter : {'X', 'Y', 'Z'}) {
      const PauliLetter l = letter == 'X' ? PauliLetter::X : letter == 'Y' ? PauliLetter::Y : PauliLetter::Z;
      const Mat expected = u * oracle::letter_matrix(letter) * u.adjoint();
      EXPECT_LT((oracle::pauli_matrix(c.conjugate_letter(l)) - expected).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_FALSE(c.image_x().is_identity_letters());
    EXPECT_FALSE(c.image_z().is_identity_letters());
    EXPECT_FALSE(c.image_x().commutes_with(c.image_z()));
    seen.insert(c.image_x().index() * 100 + c.image_z().index() * 10 + static_cast<int>(c.image_x().phase()) +
                1000 * static_cast<int>(c.image_z().phase()));
  }
  EXPECT_EQ(seen.size(), 24u);
  EXPECT_EQ(SingleQubitClifford(0), SingleQubitClifford::identity());
}

TEST(SingleQubitClifford, ClosedUnderCompositionAndInverse) {
  for (int a = 0; a < kNumSingleQubitCliffords; ++a) {
    const SingleQubitClifford ca(a);
    const Mat ua = oracle::word_matrix(ca.word());
    EXPECT_TRUE(oracle::equal_up_to_phase(oracle::word_matrix(ca.inverse().word()), ua.adjoint()));
    EXPECT_EQ(ca.then(ca.inverse()), SingleQubitClifford::identity());
    for (int b = 0; b < kNumSingleQubitCliffords; ++b) {
      const SingleQubitClifford cb(b);
      const Mat expected = oracle::word_matrix(cb.word()) * ua;
      ASSERT_TRUE(oracle::equal_up_to_phase(oracle::word_matrix(ca.then(cb).word()), expected)) << a << "," << b;
    }
  }
}

TEST(SingleQubitClifford, NamedElements) {
  const SingleQubitClifford h = SingleQubitClifford::hadamard();
  EXPECT_EQ(h.conjugate_letter(PauliLetter::X), PauliOperator::from_string("Z"));
  EXPECT_EQ(h.conjugate_letter(PauliLetter::Z), PauliOperator::from_string("X"));
  const SingleQubitClifford s = SingleQubitClifford::phase_s();
  EXPECT_EQ(s.conjugate_letter(PauliLetter::X), PauliOperator::from_string("Y"));
  const Mat expected = oracle::phase_s() * oracle::letter_matrix('X') * oracle::phase_s().adjoint();
  EXPECT_LT((oracle::letter_matrix('Y') - expected).cwiseAbs().maxCoeff(), 1e-12);
  for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
    EXPECT_TRUE(SingleQubitClifford::from_pauli(l).is_pauli());
  }
}

TEST(ConjugateByClifford, IdentityFixesEverything) {
  for (const PauliOperator& p : all_signed_paulis(2)) {
    EXPECT_EQ(conjugate_by_clifford(p, SingleQubitClifford::identity(), 1), p);
  }
}

TEST(ConjugateByClifford, MatchesDenseConjugation) {
  for (int k = 0; k < kNumSingleQubitCliffords; ++k) {
    const SingleQubitClifford c(k);
    for (std::size_t q = 0; q < 2; ++q) {
      const Mat u = oracle::embed1(oracle::word_matrix(c.word()), q, 2);
      for (const PauliOperator& p : all_signed_paulis(2)) {
        const Mat expected = u * oracle::pauli_matrix(p) * u.adjoint();
        ASSERT_LT((oracle::pauli_matrix(conjugate_by_clifford(p, c, q)) - expected).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(ConjugateByClifford, IsAutomorphism) {
  const auto paulis = all_signed_paulis(2);
  for (int k = 0; k < kNumSingleQubitCliffords; ++k) {
    const SingleQubitClifford c(k);
    for (std::size_t i = 0; i < paulis.size(); i += 3) {
      for (std::size_t j = 0; j < paulis.size(); j += 5) {
        const PauliOperator lhs = conjugate_by_clifford(paulis[i] * paulis[j], c, 0);
        const PauliOperator rhs = conjugate_by_clifford(paulis[i], c, 0) * conjugate_by_clifford(paulis[j], c, 0);
        ASSERT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(ConjugateByClifford, OutOfRangeThrows) {
  EXPECT_THROW(conjugate_by_clifford(PauliOperator(2), SingleQubitClifford::hadamard(), 2), std::out_of_range);
}

TEST(ConjugateByUzz, CommutingPauliFixed) {
  EXPECT_EQ(conjugate_by_uzz(PauliOperator::from_string("ZI"), {0, 1}), PauliOperator::from_string("ZI"));
}

TEST(ConjugateByUzz, XMapsToYZ) {
  EXPECT_EQ(conjugate_by_uzz(PauliOperator::from_string("XI"), {0, 1}), PauliOperator::from_string("YZ"));
}

TEST(ConjugateByUzz, MatchesDenseConjugationAllPairs) {
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (a == b) continue;
      const Mat u = oracle::uzz(a, b, 3);
      for (const PauliOperator& p : all_signed_paulis(3)) {
        const Mat expected = u * oracle::pauli_matrix(p) * u.adjoint();
        const PauliOperator img =
            conjugate_by_uzz(p, {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
        ASSERT_LT((oracle::pauli_matrix(img) - expected).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(ConjugateByUzz, DoubleConjugationIsZZConjugation) {
  // UZZ^2 = -i ZZ, so two conjugations flip exactly the Paulis anticommuting with ZZ.
  const PauliOperator yx = PauliOperator::from_string("YX");
  const PauliOperator twice = conjugate_by_uzz(conjugate_by_uzz(yx, {0, 1}), {0, 1});
  const Mat zz = oracle::pauli_matrix(PauliOperator::from_string("ZZ"));
  const Mat expected = zz * oracle::pauli_matrix(yx) * zz;
  EXPECT_LT((oracle::pauli_matrix(twice) - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(twice, yx);
  const PauliOperator xi = PauliOperator::from_string("XI");
  EXPECT_EQ(conjugate_by_uzz(conjugate_by_uzz(xi, {0, 1}), {0, 1}), PauliOperator::from_string("-XI"));
}

TEST(ConjugateByUzz, InvalidPairThrows) {
  EXPECT_THROW(conjugate_by_uzz(PauliOperator(2), {1, 1}), std::invalid_argument);
  EXPECT_THROW(conjugate_by_uzz(PauliOperator(2), {0, 2}), std::invalid_argument);
}

TEST(InvertLayerNative, EqualsInverseExactly) {
  const std::vector<Gate> seq = invert_layer_native({0, 1});
  ASSERT_EQ(seq.size(), 3u);
  const Mat expected = (Mat::Identity(4, 4) + std::complex<double>(0, 1) *
                                                  oracle::pauli_matrix(PauliOperator::from_string("ZZ"))) /
                       std::sqrt(2.0);
  const Mat got = oracle::circuit_matrix(seq, 2);
  // X_a is realized by a Clifford whose matrix may carry a global phase; it
  // appears twice, so only its square survives.
  EXPECT_TRUE(oracle::equal_up_to_phase(got, expected));
  const Mat xa = oracle::pauli_matrix(PauliOperator::from_string("XI"));
  EXPECT_LT((xa * oracle::uzz(0, 1, 2) * xa - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(InvertLayerNative, InverseOfInverseIsUzz) {
  const std::vector<Gate> seq = invert_layer_native({1, 0});
  const std::vector<Gate> back = inverse_gates(seq);
  EXPECT_TRUE(oracle::equal_up_to_phase(oracle::circuit_matrix(back, 2), oracle::uzz(0, 1, 2)));
}

TEST(InvertLayerNative, ZZFixedThroughCompiledInverse) {
  PauliOperator p = PauliOperator::from_string("ZZ");
  for (const Gate& g : invert_layer_native({0, 1})) p = conjugate_by_gate(p, g);
  EXPECT_EQ(p, PauliOperator::from_string("ZZ"));
}

TEST(Sampling, CliffordFrequenciesUniform) {
  Rng rng(11);
  std::array<int, 24> counts{};
  const int draws = 24000;
  for (int i = 0; i < draws; ++i) ++counts[sample_clifford(rng).index()];
  const double mean = draws / 24.0;
  const double sigma = std::sqrt(draws * (1.0 / 24) * (23.0 / 24));
  for (int c : counts) EXPECT_LT(std::abs(c - mean), 5 * sigma);
}

TEST(Sampling, PauliFrequenciesUniform) {
  Rng rng(12);
  std::array<int, 4> counts{};
  const int draws = 40000;
  for (int i = 0; i < draws; ++i) {
    const PauliOperator p = sample_pauli(rng, 1);
    EXPECT_EQ(p.phase(), Phase::kPlusOne);
    ++counts[p.index()];
  }
  const double sigma = std::sqrt(draws * 0.25 * 0.75);
  for (int c : counts) EXPECT_LT(std::abs(c - draws / 4.0), 5 * sigma);
}

TEST(Sampling, SeedReproducesSequence) {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(sample_clifford(a), sample_clifford(b));
    EXPECT_EQ(sample_pauli(a, 5), sample_pauli(b, 5));
  }
}

TEST(Sampling, UniformIndexBounds) {
  Rng rng(1);
  for (std::uint64_t n : {1u, 2u, 3u, 7u, 1000u}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_index(rng, n), n);
  }
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform_unit(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
}

TEST(StabilizerTableau, CircuitThenInverseIsIdentity) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Gate> gates;
    for (int l = 0; l < 4; ++l) {
      const std::vector<Gate> lg = layer_gates(sample_layer(rng, 6));
      gates.insert(gates.end(), lg.begin(), lg.end());
    }
    StabilizerTableau tab(6);
    tab.apply(gates);
    EXPECT_TRUE(tab.is_valid());
    tab.apply(inverse_gates(gates));
    EXPECT_EQ(tab, StabilizerTableau::identity(6));
  }
}

TEST(StabilizerTableau, RowsMatchDenseConjugation) {
  Rng rng(6);
  const std::vector<Gate> gates = layer_gates(sample_layer(rng, 2));
  StabilizerTableau tab(2);
  tab.apply(gates);
  const Mat u = oracle::circuit_matrix(gates, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    PauliOperator x(2), z(2);
    x.set_letter(j, PauliLetter::X);
    z.set_letter(j, PauliLetter::Z);
    EXPECT_LT((oracle::pauli_matrix(tab.destabilizer(j)) - u * oracle::pauli_matrix(x) * u.adjoint())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
    EXPECT_LT((oracle::pauli_matrix(tab.stabilizer(j)) - u * oracle::pauli_matrix(z) * u.adjoint())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(StabilizerTableau, Measurement) {
  Rng rng(8);
  StabilizerTableau zero(2);
  const MeasurementResult m = zero.measure_z(1, rng);
  EXPECT_TRUE(m.deterministic);
  EXPECT_FALSE(m.outcome);

  StabilizerTableau flipped(2);
  flipped.apply_pauli(PauliOperator::from_string("IX"));
  EXPECT_TRUE(flipped.measure_z(1, rng).outcome);
  EXPECT_FALSE(flipped.measure_z(0, rng).outcome);

  // |+> collapses at random, then repeats its outcome.
  int ones = 0;
  for (int t = 0; t < 400; ++t) {
    StabilizerTableau plus(2);
    plus.apply(Gate{CliffordGate{SingleQubitClifford::hadamard(), 0}});
    const MeasurementResult a = plus.measure_z(0, rng);
    EXPECT_FALSE(a.deterministic);
    const MeasurementResult b = plus.measure_z(0, rng);
    EXPECT_TRUE(b.deterministic);
    EXPECT_EQ(a.outcome, b.outcome);
    ones += a.outcome;
  }
  EXPECT_GT(ones, 140);
  EXPECT_LT(ones, 260);
}

TEST(StabilizerTableau, PauliRecognition) {
  StabilizerTableau tab(3);
  const PauliOperator p = PauliOperator::from_string("XYZ");
  for (std::size_t q = 0; q < 3; ++q) {
    tab.apply(Gate{CliffordGate{SingleQubitClifford::from_pauli(p.letter(q)), static_cast<std::uint32_t>(q)}});
  }
  EXPECT_TRUE(tab.is_pauli(p));
  EXPECT_FALSE(tab.is_pauli(PauliOperator::from_string("XYI")));
}

TEST(FramePotential, CliffordGroupIsTwoDesign) {
  double acc = 0.0;
  for (int k = 0; k < kNumSingleQubitCliffords; ++k) {
    acc += std::pow(std::norm(oracle::word_matrix(SingleQubitClifford(k).word()).trace()), 2);
  }
  EXPECT_NEAR(acc / 24.0, 2.0, 1e-12);
}

}  // namespace
}  // namespace mirbench
