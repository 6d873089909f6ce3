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

#include "qnet/registers.hpp"

#include <cmath>

#include "qnet/config.hpp"
#include "qnet/error.hpp"

namespace qnet {

RegisterLayout::RegisterLayout(std::vector<std::size_t> register_dims,
                               bool has_aux)
    : dims_(std::move(register_dims)), has_aux_(has_aux) {
  if (dims_.empty()) throw InvalidInput("layout: no registers");
  const std::size_t cap = config::dim_cap();
  for (std::size_t d : dims_) {
    if (d == 0) throw InvalidInput("layout: zero register dimension");
    if (register_dim_ > cap / d) {
      throw CapacityError("layout: register dimension exceeds cap");
    }
    register_dim_ *= d;
  }
}

std::size_t RegisterLayout::register_value(std::size_t flat_index,
                                           std::size_t reg) const {
  if (reg >= dims_.size()) throw InvalidInput("layout: register out of range");
  if (flat_index >= register_dim_) {
    throw InvalidInput("layout: flat index out of range");
  }
  // Big-endian: the first register varies slowest.
  std::size_t stride = 1;
  for (std::size_t j = reg + 1; j < dims_.size(); ++j) stride *= dims_[j];
  return (flat_index / stride) % dims_[reg];
}

std::size_t encode_index(const std::vector<int>& bits) {
  std::size_t value = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidInput("encode_index: non-binary digit");
    value = (value << 1) | static_cast<std::size_t>(b);
  }
  return value;
}

AugmentedState make_augmented(const CVec& psi, const RegisterLayout& layout) {
  if (!layout.has_aux()) {
    throw InvalidInput("make_augmented: layout has no auxiliary qubit");
  }
  if (psi.size() != layout.register_dim()) {
    throw InvalidInput("make_augmented: psi dim != register dim");
  }
  AugmentedState s{layout, CVec(layout.total_dim())};
  for (std::size_t m = 0; m < psi.size(); ++m) s.amplitudes[m] = psi[m];
  return s;
}

CVec project_aux(const AugmentedState& s, int branch, bool renormalize) {
  if (!s.layout.has_aux()) {
    throw InvalidInput("project_aux: layout has no auxiliary qubit");
  }
  if (branch != 0 && branch != 1) {
    throw InvalidInput("project_aux: branch must be 0 or 1");
  }
  const std::size_t dim = s.register_dim();
  CVec out(dim);
  const std::size_t offset = static_cast<std::size_t>(branch) * dim;
  for (std::size_t m = 0; m < dim; ++m) out[m] = s.amplitudes[offset + m];
  if (renormalize) {
    const double n = norm2(out);
    if (n == 0.0) {
      throw DegenerateState("project_aux: zero-norm branch");
    }
    for (Complex& z : out) z /= n;
  }
  return out;
}

double branch_norm_sq(const AugmentedState& s, int branch) {
  const std::size_t dim = s.register_dim();
  const std::size_t offset = static_cast<std::size_t>(branch) * dim;
  double acc = 0.0;
  for (std::size_t m = 0; m < dim; ++m) {
    acc += std::norm(s.amplitudes[offset + m]);
  }
  return acc;
}

}  // namespace qnet
