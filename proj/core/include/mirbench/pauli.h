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

#ifndef MIRBENCH_PAULI_H
#define MIRBENCH_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace mirbench {

/// Maximum register width supported by the bit-packed Pauli representation.
inline constexpr std::size_t kMaxQubits = 64;

/// Single-qubit Pauli letter. The numeric value is also the base-4 digit used
/// when Paulis are enumerated as a basis (index = sum_q digit_q * 4^q).
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Global phase of a Pauli operator, stored as the exponent k of i^k.
enum class Phase : std::uint8_t { kPlusOne = 0, kPlusI = 1, kMinusOne = 2, kMinusI = 3 };

/// An n-qubit Pauli operator i^k * P_0 (x) P_1 (x) ... with Hermitian letters
/// (x=1,z=1 is Y, not XZ). Qubit q is bit q of the x/z masks.
class PauliOperator {
 public:
  /// Identity on `n_qubits` qubits.
  explicit PauliOperator(std::size_t n_qubits);
  PauliOperator(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                Phase phase = Phase::kPlusOne);

  /// Parses strings like "XYZ_", "+iXZ", "-YI". Character k is qubit k; 'I' and
  /// '_' both denote identity.
  static PauliOperator from_string(std::string_view text);

  /// Phase-free Pauli with the given basis index (base-4 digits, qubit 0 least
  /// significant).
  static PauliOperator from_index(std::size_t n_qubits, std::uint64_t index);

  std::size_t n_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  Phase phase() const { return phase_; }

  PauliLetter letter(std::size_t qubit) const;
  void set_letter(std::size_t qubit, PauliLetter letter);
  void set_phase(Phase phase) { phase_ = phase; }

  /// Multiplies the phase by i^k.
  void add_phase(int k);

  /// Base-4 basis index of the letters, ignoring phase.
  std::uint64_t index() const;

  /// True when every letter is I (phase is not inspected).
  bool is_identity_letters() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const;
  bool commutes_with(const PauliOperator& other) const;

  /// Letters only, with the phase dropped.
  PauliOperator letters_only() const { return PauliOperator(n_qubits_, x_, z_); }

  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  std::size_t n_qubits_;
  std::uint64_t x_;
  std::uint64_t z_;
  Phase phase_;
};

/// Group product p*q with exact phase. Throws std::invalid_argument on width mismatch.
PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q);

inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
  return pauli_multiply(p, q);
}

/// Exponent of i picked up when multiplying two Hermitian letters a*b.
int letter_product_phase(PauliLetter a, PauliLetter b);

char letter_char(PauliLetter letter);

}  // namespace mirbench

#endif  // MIRBENCH_PAULI_H
