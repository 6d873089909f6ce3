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

#pragma once

#include <cstddef>
#include <vector>

#include "qnet/matrix.hpp"
#include "qnet/network.hpp"

namespace qnet {

// Decompositions connecting circuit elements to gates: the Pauli expansion
// of elementary matrices |m><n|, exchange-form networks, and the library of
// textbook gates expressed as element networks.

enum class PauliLetter { I, X, Y, Z };

/// One tensor-product term of a Pauli expansion. The letter Y stands for
/// the real antisymmetric matrix [[0,-1],[1,0]] (i.e. -i sigma_y), so every
/// coefficient of an elementary-matrix expansion is real (+-1/2^k).
struct PauliTerm {
  Complex coefficient;
  std::vector<PauliLetter> letters;
};

Matrix pauli_letter_matrix(PauliLetter letter);

/// Expansion of |m><n| over k qubits into 2^k Pauli terms. Expanding the
/// terms reproduces the elementary matrix exactly.
std::vector<PauliTerm> pauli_decompose(std::size_t m, std::size_t n,
                                       std::size_t k);

/// Sum of Kronecker-expanded terms; the oracle side of the decomposition.
Matrix pauli_expand(const std::vector<PauliTerm>& terms);

/// Network built from the exchange-gate factorization
/// U = sum_mn U_mn E(m,n)|n><n|. Since E(m,n)|n><n| = |m><n| exactly, the
/// emitted elements coincide with q_of(U); the E-gate product itself is
/// available through exchange_factors for inspection.
Network exchange_form(const Matrix& u);

/// Single-state phase: |n> -> e^{i alpha} |n>, other basis states fixed.
/// An identity stage plus one rotator with amplitude e^{i alpha} - 1;
/// alpha = pi gives the reflection I - 2|n><n|.
Network gate_phase(std::size_t n, double alpha, std::size_t dim);

/// Lift of a 2x2 gate onto qubit i of k (big-endian positions).
Network gate_single_qubit(const Matrix& u1, std::size_t i, std::size_t k);

/// Controlled gate |0><0| (x) I + |1><1| (x) U, one control qubit.
Network gate_controlled(const Matrix& u);

/// Three-factor network of the Toffoli gate on three qubits.
Network gate_toffoli();

/// Diagonal transformation: one rotator per entry.
Network gate_diagonal(const CVec& entries);

}  // namespace qnet
