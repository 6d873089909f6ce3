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

namespace qnet::config {

/// Hard cap on register/operator dimensions (kron results, layouts).
/// Default 2^16; override with the QNET_CAP_DIM environment variable.
std::size_t dim_cap();

/// Cap on the dimension accepted by the dense matrix exponential.
std::size_t expm_dim_cap();

/// Cap on the register dimension accepted by dense network materialization.
std::size_t materialize_dim_cap();

/// Maximum number of Euler steps a single evolution network may chain.
std::size_t max_evolve_steps();

}  // namespace qnet::config
