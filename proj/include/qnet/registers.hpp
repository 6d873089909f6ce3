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

namespace qnet {

/// Ordered register dimensions plus an optional auxiliary qubit.
///
/// Basis-state indexing is big-endian: the first register is the most
/// significant factor of a flat index, and within a qubit register the
/// first qubit is the most significant bit. The auxiliary qubit is the
/// outermost (slowest-varying) factor of the augmented space, so an
/// augmented index is branch * register_dim + m.
class RegisterLayout {
 public:
  RegisterLayout(std::vector<std::size_t> register_dims, bool has_aux);

  const std::vector<std::size_t>& register_dims() const { return dims_; }
  bool has_aux() const { return has_aux_; }
  std::size_t num_registers() const { return dims_.size(); }

  /// Product of all register dimensions.
  std::size_t register_dim() const { return register_dim_; }
  /// register_dim() doubled when the auxiliary qubit is present.
  std::size_t total_dim() const {
    return register_dim_ * (has_aux_ ? 2 : 1);
  }

  /// Mixed-radix digit of a flat register index for one register.
  std::size_t register_value(std::size_t flat_index, std::size_t reg) const;

 private:
  std::vector<std::size_t> dims_;
  bool has_aux_ = false;
  std::size_t register_dim_ = 1;
};

/// Big-endian bit-string to basis index; digits must be 0 or 1.
std::size_t encode_index(const std::vector<int>& bits);

/// State over register space (x) auxiliary qubit. Not required to be
/// normalized: network evaluation produces unnormalized branches.
struct AugmentedState {
  RegisterLayout layout;
  CVec amplitudes;

  std::size_t register_dim() const { return layout.register_dim(); }

  Complex& at(std::size_t m, int branch) {
    return amplitudes[static_cast<std::size_t>(branch) * register_dim() + m];
  }
  const Complex& at(std::size_t m, int branch) const {
    return amplitudes[static_cast<std::size_t>(branch) * register_dim() + m];
  }
};

/// psi into the aux-0 branch, zeros into the aux-1 branch.
AugmentedState make_augmented(const CVec& psi, const RegisterLayout& layout);

/// Register-space vector of the chosen aux branch. With renormalize set,
/// throws DegenerateState if the branch has zero norm.
CVec project_aux(const AugmentedState& s, int branch,
                 bool renormalize = false);

double branch_norm_sq(const AugmentedState& s, int branch);

}  // namespace qnet
