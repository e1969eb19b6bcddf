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

#include "mirbench/clifford.h"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirbench {

namespace {

struct Entry {
  PauliOperator image_x{1};
  PauliOperator image_z{1};
  Matrix2c matrix{};
  std::string word;
};

struct Table {
  std::array<Entry, kNumSingleQubitCliffords> entries;
  std::array<std::array<int, kNumSingleQubitCliffords>, kNumSingleQubitCliffords> then{};
  std::array<int, kNumSingleQubitCliffords> inverse{};
  int hadamard = -1;
  int phase_s = -1;
  std::array<int, 4> pauli{};
};

Matrix2c matmul(const Matrix2c& a, const Matrix2c& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

PauliOperator apply_action(const Entry& e, const PauliOperator& single) {
  PauliOperator img(1);
  switch (single.letter(0)) {
    case PauliLetter::I:
      break;
    case PauliLetter::X:
      img = e.image_x;
      break;
    case PauliLetter::Z:
      img = e.image_z;
      break;
    case PauliLetter::Y:
      // Y = iXZ.
      img = pauli_multiply(e.image_x, e.image_z);
      img.add_phase(1);
      break;
  }
  img.add_phase(static_cast<int>(single.phase()));
  return img;
}

int action_key(const PauliOperator& x, const PauliOperator& z) {
  return static_cast<int>(x.index()) * 16 + static_cast<int>(x.phase()) * 4 +
         static_cast<int>(z.index()) * 64 * 4 + static_cast<int>(z.phase());
}

Table build_table() {
  const double r = 1.0 / std::sqrt(2.0);
  Entry h;
  h.image_x = PauliOperator::from_string("Z");
  h.image_z = PauliOperator::from_string("X");
  h.matrix = {r, r, r, -r};
  h.word = "H";
  Entry s;
  s.image_x = PauliOperator::from_string("Y");
  s.image_z = PauliOperator::from_string("Z");
  s.matrix = {1.0, 0.0, 0.0, std::complex<double>(0.0, 1.0)};
  s.word = "S";

  Table t;
  std::vector<Entry> found;
  std::vector<int> keys;
  Entry id;
  id.image_x = PauliOperator::from_string("X");
  id.image_z = PauliOperator::from_string("Z");
  id.matrix = {1.0, 0.0, 0.0, 1.0};
  found.push_back(id);
  keys.push_back(action_key(id.image_x, id.image_z));

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (const Entry* gen : {&h, &s}) {
      Entry next;
      next.image_x = apply_action(*gen, found[cur].image_x);
      next.image_z = apply_action(*gen, found[cur].image_z);
      const int key = action_key(next.image_x, next.image_z);
      bool seen = false;
      for (int k : keys) seen = seen || k == key;
      if (seen) continue;
      next.matrix = matmul(gen->matrix, found[cur].matrix);
      next.word = found[cur].word + gen->word;
      found.push_back(next);
      keys.push_back(key);
      frontier.push_back(found.size() - 1);
    }
  }
  if (found.size() != kNumSingleQubitCliffords) {
    throw std::logic_error("single-qubit Clifford enumeration produced the wrong group order");
  }
  for (int i = 0; i < kNumSingleQubitCliffords; ++i) t.entries[i] = found[i];

  auto lookup = [&](const PauliOperator& x, const PauliOperator& z) {
    const int key = action_key(x, z);
    for (int i = 0; i < kNumSingleQubitCliffords; ++i) {
      if (keys[i] == key) return i;
    }
    throw std::logic_error("Clifford action not in table");
  };
  for (int a = 0; a < kNumSingleQubitCliffords; ++a) {
    for (int b = 0; b < kNumSingleQubitCliffords; ++b) {
      const Entry& first = t.entries[a];
      const Entry& second = t.entries[b];
      t.then[a][b] = lookup(apply_action(second, first.image_x),
                            apply_action(second, first.image_z));
    }
  }
  for (int a = 0; a < kNumSingleQubitCliffords; ++a) {
    for (int b = 0; b < kNumSingleQubitCliffords; ++b) {
      if (t.then[a][b] == 0) t.inverse[a] = b;
    }
  }
  t.hadamard = lookup(h.image_x, h.image_z);
  t.phase_s = lookup(s.image_x, s.image_z);
  t.pauli[0] = 0;
  t.pauli[1] = lookup(PauliOperator::from_string("X"), PauliOperator::from_string("-Z"));
  t.pauli[2] = lookup(PauliOperator::from_string("-X"), PauliOperator::from_string("-Z"));
  t.pauli[3] = lookup(PauliOperator::from_string("-X"), PauliOperator::from_string("Z"));
  return t;
}

const Table& table() {
  static const Table kTable = build_table();
  return kTable;
}

}  // namespace

SingleQubitClifford::SingleQubitClifford(int index) : index_(index) {
  if (index < 0 || index >= kNumSingleQubitCliffords) {
    throw std::out_of_range("SingleQubitClifford: index must be in [0, 24), got " +
                            std::to_string(index));
  }
}

SingleQubitClifford SingleQubitClifford::hadamard() { return SingleQubitClifford(table().hadamard); }

SingleQubitClifford SingleQubitClifford::phase_s() { return SingleQubitClifford(table().phase_s); }

SingleQubitClifford SingleQubitClifford::from_pauli(PauliLetter letter) {
  return SingleQubitClifford(table().pauli[static_cast<int>(letter)]);
}

const PauliOperator& SingleQubitClifford::image_x() const { return table().entries[index_].image_x; }

const PauliOperator& SingleQubitClifford::image_z() const { return table().entries[index_].image_z; }

PauliOperator SingleQubitClifford::conjugate_letter(PauliLetter letter) const {
  return apply_action(table().entries[index_],
                      PauliOperator::from_index(1, static_cast<std::uint64_t>(letter)));
}

SingleQubitClifford SingleQubitClifford::then(SingleQubitClifford next) const {
  return SingleQubitClifford(table().then[index_][next.index_]);
}

SingleQubitClifford SingleQubitClifford::inverse() const {
  return SingleQubitClifford(table().inverse[index_]);
}

const Matrix2c& SingleQubitClifford::matrix() const { return table().entries[index_].matrix; }

std::string_view SingleQubitClifford::word() const { return table().entries[index_].word; }

bool SingleQubitClifford::is_pauli() const {
  for (int p : table().pauli) {
    if (p == index_) return true;
  }
  return false;
}

PauliOperator conjugate_by_clifford(const PauliOperator& p, SingleQubitClifford c,
                                    std::size_t qubit) {
  if (qubit >= p.n_qubits()) {
    throw std::out_of_range("conjugate_by_clifford: qubit " + std::to_string(qubit) +
                            " out of range for " + std::to_string(p.n_qubits()) + " qubits");
  }
  const PauliOperator img = c.conjugate_letter(p.letter(qubit));
  PauliOperator out = p;
  out.set_letter(qubit, img.letter(0));
  out.add_phase(static_cast<int>(img.phase()));
  return out;
}

}  // namespace mirbench
