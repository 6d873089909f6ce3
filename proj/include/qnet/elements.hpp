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

#include <cstdint>
#include <variant>
#include <vector>

#include "qnet/matrix.hpp"
#include "qnet/registers.hpp"

namespace qnet {

// Circuit elements act on the augmented space (register (x) aux qubit).
// Writing c+ for the aux raise |1><0| and c for the lower |0><1|:
//
//   Rotator(m, a)      I + a |m><m| (x) c+   (diagonal carrier)
//   Transitor(m, n, a) I + a |m><n| (x) c+   (off-diagonal carrier, m != n)
//   Jointer            I_R (x) c+            (nilpotent raise)
//   Connector          I_R (x) c             (nilpotent lower)
//   ProjectorD         I_R (x) |1><1|        (keep the result branch)
//   ProjectorP         I_R (x) |0><0|        (keep the input branch)
//   External           a foreign operator on the register space
//
// Since (c+)^2 = 0, rotator/transitor factors commute and multiply by
// accumulating their terms; a jointer applied twice annihilates the state.

struct Rotator {
  std::size_t m;
  Complex amp;
};

struct Transitor {
  std::size_t m;
  std::size_t n;
  Complex amp;
};

struct Jointer {};
struct Connector {};
struct ProjectorD {};
struct ProjectorP {};

/// Externally supplied operator embedded as a single element.
/// register_only: apply op (x) I_A, i.e. op on both aux branches; this is
/// how a foreign network with its own internal structure is spliced into
/// a connector chain. Otherwise the element acts like the universal
/// network of op, I + op (x) c+: the result branch gains op * branch-0.
struct External {
  Matrix op;
  bool register_only = false;
};

using Element = std::variant<Rotator, Transitor, Jointer, Connector,
                             ProjectorD, ProjectorP, External>;

Element build_rotator(std::size_t m, Complex amp, std::size_t dim);
Element build_transitor(std::size_t m, std::size_t n, Complex amp,
                        std::size_t dim);

/// Counter for the amplitude reads/updates performed during evaluation.
/// Rotators and transitors cost one operation; jointer, connector and the
/// projectors cost O(dim); externals cost one dense apply per branch.
struct EvalStats {
  std::uint64_t amplitude_ops = 0;
};

void apply_element_inplace(const Element& e, AugmentedState& s,
                           EvalStats* stats = nullptr);
AugmentedState apply_element(const Element& e, const AugmentedState& s,
                             EvalStats* stats = nullptr);

/// Generalized exchange gate: the permutation taking |n> to |m>, built as
/// a product of |m-n| adjacent two-state exchanges. Adjacent gates are
/// Hermitian involutions; for |m-n| > 1 the product is the unitary cycle
/// that satisfies E(m,n)|n> = |m> and <m|E(m,n) = <n|. E(m,m) = I.
Matrix exchange_gate(std::size_t m, std::size_t n, std::size_t dim);

/// Adjacent two-state exchange factors of E(m,n), in matrix order.
std::vector<Matrix> exchange_factors(std::size_t m, std::size_t n,
                                     std::size_t dim);

/// The literal product ordering of the construction formula, kept for the
/// verification report: it maps |n> to the wrong state for |m-n| > 1, and
/// exchange_gate uses the reversed ordering that satisfies E(m,n)|n> = |m>.
Matrix exchange_gate_printed_order(std::size_t m, std::size_t n,
                                   std::size_t dim);

/// Dense (2 dim x 2 dim) form of an element on the augmented space.
/// Exists for verification; evaluation never materializes elements.
Matrix materialize_element(const Element& e, std::size_t dim);

}  // namespace qnet
