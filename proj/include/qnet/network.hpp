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

#include <string>
#include <vector>

#include "qnet/elements.hpp"
#include "qnet/matrix.hpp"
#include "qnet/registers.hpp"

namespace qnet {

/// Labeled range of stages, [begin, end). Connector-delimited slots of a
/// product composition are marked so a subnetwork can be swapped by label.
struct StageMark {
  std::string label;
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Executable network IR: an ordered sequence of circuit elements over a
/// register dimension.
///
/// Stages are stored in application order: stages()[0] acts on the state
/// first, and the dense matrix of the network is the reverse-order product
/// of the element matrices.
///
/// A network built by product composition represents I + (product of its
/// stages): the identity term that keeps the transformation reversible is
/// implicit and identity_plus() reports it. Rotator/transitor-only networks
/// never need the flag because each such element already carries its own
/// identity part.
class Network {
 public:
  Network() = default;
  explicit Network(std::size_t dim, std::string label = "");

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool identity_plus() const { return identity_plus_; }
  void set_identity_plus(bool v) { identity_plus_ = v; }

  const std::vector<Element>& stages() const { return stages_; }
  std::size_t size() const { return stages_.size(); }
  bool pure_elements() const;  // rotators/transitors only

  /// Appends an element; indices are validated against dim().
  void push(Element e);

  const std::vector<StageMark>& marks() const { return marks_; }
  void add_mark(StageMark mark);

  /// Copy with the implicit identity term dropped: the bare interior
  /// operator of a product composition (the part that squares to zero).
  Network interior() const;

 private:
  std::size_t dim_ = 0;
  std::string label_;
  std::vector<Element> stages_;
  std::vector<StageMark> marks_;
  bool identity_plus_ = false;
};

/// Universal network of U: one rotator per nonzero diagonal entry, one
/// transitor per nonzero off-diagonal entry. Acting on psi (x) |0>_A the
/// result is psi (x) |0>_A + (U psi) (x) |1>_A; the dense form is the
/// block matrix [[I, 0], [U, I]]. Entries with magnitude at most
/// zero_threshold are skipped (default: exact zeros only). U need not be
/// unitary or even invertible.
Network q_of(const Matrix& u, double zero_threshold = 0.0);

/// Same elements with negated amplitudes; inverse_network(q_of(U)) equals
/// q_of(-U) and their dense forms multiply to the identity. Only defined
/// for rotator/transitor networks.
Network inverse_network(const Network& net);

/// Folds the stages over the state in application order; adds the input
/// back once for identity_plus networks. Pure and deterministic.
AugmentedState evaluate(const Network& net, const AugmentedState& s,
                        EvalStats* stats = nullptr);

/// Network of a sum of parts: plain concatenation of the element lists
/// (order immaterial, the factors commute).
Network compose_sum(const std::vector<Network>& nets);

/// Network of a product of steps. The first listed network is the leftmost
/// matrix factor, so it acts on the state last. Slots are chained with
/// connectors and the result carries the implicit identity term; each slot
/// is marked with the subnetwork's label. A slot consisting of one
/// register_only external splices in without a trailing connector.
Network compose_product(const std::vector<Network>& nets);

/// Product composition lifted to the two-register form: the result acts as
/// the identity on an in register of the same dimension and as the bare
/// product interior on the out register (x) aux. Evaluating on
/// psi_in (x) psi_out (x) |0> yields psi_in (x) (U1...Ur psi_out) (x) |1>.
Network two_register_lift(const std::vector<Network>& nets);

/// q_of of I (x) ... (x) U (x) ... (x) I with U in the given slot, emitted
/// directly from the entries of U without forming the dense Kronecker
/// product.
Network tensor_lift(const Matrix& u, std::size_t slot,
                    const std::vector<std::size_t>& dims);

/// Ordered dense product of the stages ((+ I) for identity_plus networks).
/// Agrees with evaluate on every basis state; verification only.
Matrix materialize_network(const Network& net);

/// Dense matrix of the network's branch-1 action, recovered by evaluating
/// the network on every register basis state. Verification only.
Matrix network_action(const Network& net);

/// Single-element network wrapping a foreign operator; see External.
Network embed_external(const Matrix& op, bool register_only);

/// Replaces the stages of the named slot; returns false if no mark has the
/// label. The replacement must present the universal-network block form.
bool swap_slot(Network& net, const std::string& label,
               const Network& replacement);

}  // namespace qnet
