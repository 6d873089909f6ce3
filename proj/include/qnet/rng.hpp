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
#include <random>

#include "qnet/matrix.hpp"

namespace qnet {

/// Seeded deterministic generator. The double mapping is implemented from
/// raw 64-bit draws so identical seeds give identical streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) %
           n;
  }

  Complex complex_unit_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 gen_;
};

/// Entries uniform in the complex box [-scale, scale]^2.
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                     double scale = 1.0);

Matrix random_hermitian(Rng& rng, std::size_t n, double scale = 1.0);

/// Random complex vector; unit norm unless normalized = false.
CVec random_state(Rng& rng, std::size_t dim, bool normalized = true);

}  // namespace qnet
