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

#include "mirbench/pauli.h"

#include <bit>
#include <stdexcept>

namespace mirbench {

namespace {

std::uint64_t width_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_width(std::size_t n) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("PauliOperator: qubit count must be in [1, 64], got " +
                                std::to_string(n));
  }
}

}  // namespace

PauliOperator::PauliOperator(std::size_t n_qubits)
    : PauliOperator(n_qubits, 0, 0, Phase::kPlusOne) {}

PauliOperator::PauliOperator(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                             Phase phase)
    : n_qubits_(n_qubits), x_(x_bits), z_(z_bits), phase_(phase) {
  check_width(n_qubits);
  if ((x_bits | z_bits) & ~width_mask(n_qubits)) {
    throw std::invalid_argument("PauliOperator: bits set beyond qubit count");
  }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  int k = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    k = text.front() == '-' ? 2 : 0;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    k += 1;
    text.remove_prefix(1);
  }
  PauliOperator result(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        result.set_letter(q, PauliLetter::X);
        break;
      case 'Y':
        result.set_letter(q, PauliLetter::Y);
        break;
      case 'Z':
        result.set_letter(q, PauliLetter::Z);
        break;
      default:
        throw std::invalid_argument("PauliOperator: bad character in '" + std::string(text) + "'");
    }
  }
  result.add_phase(k);
  return result;
}

PauliOperator PauliOperator::from_index(std::size_t n_qubits, std::uint64_t index) {
  PauliOperator result(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    result.set_letter(q, static_cast<PauliLetter>(index & 3u));
    index >>= 2;
  }
  if (index != 0) {
    throw std::invalid_argument("PauliOperator::from_index: index out of range");
  }
  return result;
}

PauliLetter PauliOperator::letter(std::size_t qubit) const {
  if (qubit >= n_qubits_) throw std::out_of_range("PauliOperator::letter: qubit out of range");
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  if (x) return z ? PauliLetter::Y : PauliLetter::X;
  return z ? PauliLetter::Z : PauliLetter::I;
}

void PauliOperator::set_letter(std::size_t qubit, PauliLetter letter) {
  if (qubit >= n_qubits_) throw std::out_of_range("PauliOperator::set_letter: qubit out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const bool x = letter == PauliLetter::X || letter == PauliLetter::Y;
  const bool z = letter == PauliLetter::Z || letter == PauliLetter::Y;
  x_ = x ? (x_ | bit) : (x_ & ~bit);
  z_ = z ? (z_ | bit) : (z_ & ~bit);
}

void PauliOperator::add_phase(int k) {
  phase_ = static_cast<Phase>(((static_cast<int>(phase_) + k) % 4 + 4) % 4);
}

std::uint64_t PauliOperator::index() const {
  if (n_qubits_ > 32) throw std::out_of_range("PauliOperator::index: more than 32 qubits");
  std::uint64_t idx = 0;
  for (std::size_t q = n_qubits_; q-- > 0;) {
    idx = (idx << 2) | static_cast<std::uint64_t>(letter(q));
  }
  return idx;
}

bool PauliOperator::is_hermitian() const {
  return phase_ == Phase::kPlusOne || phase_ == Phase::kMinusOne;
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("commutes_with: width mismatch");
  return (std::popcount((x_ & other.z_) ^ (z_ & other.x_)) & 1) == 0;
}

std::string PauliOperator::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[static_cast<int>(phase_)];
  for (std::size_t q = 0; q < n_qubits_; ++q) out.push_back(letter_char(letter(q)));
  return out;
}

PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw std::invalid_argument("pauli_multiply: mismatched qubit counts (" +
                                std::to_string(p.n_qubits()) + " vs " +
                                std::to_string(q.n_qubits()) + ")");
  }
  const std::uint64_t x1 = p.x_bits(), z1 = p.z_bits();
  const std::uint64_t x2 = q.x_bits(), z2 = q.z_bits();
  // Per-qubit i^{+1}: XY, YZ, ZX.  i^{-1}: XZ, YX, ZY.
  const std::uint64_t pos = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
  const std::uint64_t neg = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
  PauliOperator result(p.n_qubits(), x1 ^ x2, z1 ^ z2, p.phase());
  result.add_phase(static_cast<int>(q.phase()) + std::popcount(pos) - std::popcount(neg));
  return result;
}

int letter_product_phase(PauliLetter a, PauliLetter b) {
  const PauliOperator pa = PauliOperator::from_index(1, static_cast<std::uint64_t>(a));
  const PauliOperator pb = PauliOperator::from_index(1, static_cast<std::uint64_t>(b));
  return static_cast<int>(pauli_multiply(pa, pb).phase());
}

char letter_char(PauliLetter letter) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(letter)];
}

}  // namespace mirbench
