// Copyright qnet authors
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

#include "qnet/compiler.hpp"

#include <cmath>

#include "qnet/error.hpp"
#include "qnet/linalg.hpp"

namespace qnet {

Matrix pauli_letter_matrix(PauliLetter letter) {
  Matrix m(2, 2);
  switch (letter) {
    case PauliLetter::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case PauliLetter::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliLetter::Y:
      m(0, 1) = -1.0;
      m(1, 0) = 1.0;
      break;
    case PauliLetter::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

std::vector<PauliTerm> pauli_decompose(std::size_t m, std::size_t n,
                                       std::size_t k) {
  if (k == 0) throw InvalidInput("pauli_decompose: k must be positive");
  const std::size_t dim = std::size_t{1} << k;
  if (m >= dim || n >= dim) {
    throw InvalidInput("pauli_decompose: index out of range");
  }

  // Per-qubit two-letter slots keyed by the bit pair (alpha, beta) of the
  // target elementary matrix. With Y = -i sigma_y:
  //   (0,0) (I+Z)/2 = |0><0|   (1,1) (I-Z)/2 = |1><1|
  //   (0,1) (X-Y)/2 = |0><1|   (1,0) (X+Y)/2 = |1><0|
  struct Slot {
    PauliLetter a, b;
    double sign_b;
  };
  std::vector<Slot> slots(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t shift = k - 1 - i;  // first qubit most significant
    const int alpha = static_cast<int>((m >> shift) & 1);
    const int beta = static_cast<int>((n >> shift) & 1);
    if (alpha == 0 && beta == 0) slots[i] = {PauliLetter::I, PauliLetter::Z, 1.0};
    if (alpha == 1 && beta == 1) slots[i] = {PauliLetter::I, PauliLetter::Z, -1.0};
    if (alpha == 0 && beta == 1) slots[i] = {PauliLetter::X, PauliLetter::Y, -1.0};
    if (alpha == 1 && beta == 0) slots[i] = {PauliLetter::X, PauliLetter::Y, 1.0};
  }

  const double base = std::ldexp(1.0, -static_cast<int>(k));  // 1/2^k
  std::vector<PauliTerm> terms;
  terms.reserve(dim);
  for (std::size_t mask = 0; mask < dim; ++mask) {
    PauliTerm term;
    term.letters.resize(k);
    double coeff = base;
    for (std::size_t i = 0; i < k; ++i) {
      const bool second = ((mask >> (k - 1 - i)) & 1) != 0;
      term.letters[i] = second ? slots[i].b : slots[i].a;
      if (second) coeff *= slots[i].sign_b;
    }
    term.coefficient = coeff;
    terms.push_back(std::move(term));
  }
  return terms;
}

Matrix pauli_expand(const std::vector<PauliTerm>& terms) {
  if (terms.empty()) throw InvalidInput("pauli_expand: no terms");
  const std::size_t k = terms.front().letters.size();
  const std::size_t dim = std::size_t{1} << k;
  Matrix acc(dim, dim);
  for (const PauliTerm& term : terms) {
    if (term.letters.size() != k) {
      throw InvalidInput("pauli_expand: ragged letter lists");
    }
    Matrix prod = Matrix::identity(1);
    for (PauliLetter letter : term.letters) {
      prod = kron(prod, pauli_letter_matrix(letter));
    }
    acc = acc + term.coefficient * prod;
  }
  return acc;
}

Network exchange_form(const Matrix& u) {
  if (!u.is_square()) {
    throw InvalidInput("exchange_form: matrix must be square");
  }
  const std::size_t dim = u.rows();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw InvalidInput("exchange_form: dimension must be a power of two");
  }
  Network net = q_of(u);
  net.set_label("exchange form");
  return net;
}

Network gate_phase(std::size_t n, double alpha, std::size_t dim) {
  if (n >= dim) throw InvalidInput("gate_phase: index out of range");
  Network net = q_of(Matrix::identity(dim));
  net.set_label("phase");
  const Complex delta = std::polar(1.0, alpha) - Complex(1.0, 0.0);
  if (delta != Complex{}) net.push(Rotator{n, delta});
  return net;
}

Network gate_single_qubit(const Matrix& u1, std::size_t i, std::size_t k) {
  if (u1.rows() != 2 || u1.cols() != 2) {
    throw InvalidInput("gate_single_qubit: gate must be 2x2");
  }
  if (i >= k) throw InvalidInput("gate_single_qubit: position out of range");
  const std::vector<std::size_t> dims(k, 2);
  Network net = tensor_lift(u1, i, dims);
  net.set_label("single-qubit gate");
  return net;
}

Network gate_controlled(const Matrix& u) {
  if (!u.is_square()) {
    throw InvalidInput("gate_controlled: matrix must be square");
  }
  const std::size_t d = u.rows();
  const std::size_t dim = 2 * d;
  Network net(dim, "controlled gate");
  // First factor: |0><0| (x) I, elementwise.
  for (std::size_t j = 0; j < d; ++j) net.push(Rotator{j, 1.0});
  // Second factor: |1><1| (x) U.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Complex a = u(i, j);
      if (a == Complex{}) continue;
      if (i == j) {
        net.push(Rotator{d + i, a});
      } else {
        net.push(Transitor{d + i, d + j, a});
      }
    }
  }
  return net;
}

Network gate_toffoli() {
  Network net(8, "toffoli");
  // I, then -|1><1| (x) |1><1| (x) I, then |1><1| (x) |1><1| (x) N.
  for (std::size_t j = 0; j < 8; ++j) net.push(Rotator{j, 1.0});
  net.push(Rotator{6, -1.0});
  net.push(Rotator{7, -1.0});
  net.push(Transitor{6, 7, 1.0});
  net.push(Transitor{7, 6, 1.0});
  return net;
}

Network gate_diagonal(const CVec& entries) {
  Network net(entries.size(), "diagonal");
  for (std::size_t m = 0; m < entries.size(); ++m) {
    if (entries[m] == Complex{}) continue;
    net.push(Rotator{m, entries[m]});
  }
  return net;
}

}  // namespace qnet
