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

#ifndef MIRBENCH_CLIFFORD_H
#define MIRBENCH_CLIFFORD_H

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

#include "mirbench/pauli.h"

namespace mirbench {

inline constexpr int kNumSingleQubitCliffords = 24;

using Matrix2c = std::array<std::complex<double>, 4>;  // row-major 2x2

/// One of the 24 single-qubit Clifford gates (modulo global phase).
///
/// The canonical table is the breadth-first enumeration of words over {H, S},
/// so index 0 is the identity and every element carries the shortest H/S word
/// that realizes it. Composition and inversion are table lookups.
class SingleQubitClifford {
 public:
  constexpr SingleQubitClifford() = default;
  explicit SingleQubitClifford(int index);

  static SingleQubitClifford identity() { return SingleQubitClifford(0); }
  static SingleQubitClifford hadamard();
  static SingleQubitClifford phase_s();
  /// The Pauli gate X, Y or Z (or identity for I) as a Clifford.
  static SingleQubitClifford from_pauli(PauliLetter letter);

  int index() const { return index_; }

  /// Signed images C X C^dagger and C Z C^dagger (single-qubit, phase +-1).
  const PauliOperator& image_x() const;
  const PauliOperator& image_z() const;

  /// C p C^dagger for a single-qubit Pauli letter; the returned phase is the
  /// sign of the image.
  PauliOperator conjugate_letter(PauliLetter letter) const;

  /// Gate that applies `*this` first and then `next`.
  SingleQubitClifford then(SingleQubitClifford next) const;
  SingleQubitClifford inverse() const;

  /// Unitary with the global phase fixed by the H/S word.
  const Matrix2c& matrix() const;
  /// Gates in circuit order, e.g. "HS" means H then S. Empty for identity.
  std::string_view word() const;

  bool is_pauli() const;

  friend bool operator==(SingleQubitClifford, SingleQubitClifford) = default;

 private:
  int index_ = 0;
};

/// c p c^dagger acting on `qubit` of an n-qubit Pauli.
/// Throws std::out_of_range if `qubit` >= p.n_qubits().
PauliOperator conjugate_by_clifford(const PauliOperator& p, SingleQubitClifford c,
                                    std::size_t qubit);

}  // namespace mirbench

#endif  // MIRBENCH_CLIFFORD_H
