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

#include "qnet/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qnet::config {

namespace {

std::size_t env_cap() {
  const char* raw = std::getenv("QNET_CAP_DIM");
  if (raw == nullptr) return std::size_t{1} << 16;
  try {
    const long long parsed = std::stoll(raw);
    if (parsed > 0) return static_cast<std::size_t>(parsed);
  } catch (...) {
  }
  return std::size_t{1} << 16;
}

}  // namespace

std::size_t dim_cap() {
  static const std::size_t cap = env_cap();
  return cap;
}

std::size_t expm_dim_cap() { return std::min<std::size_t>(1024, dim_cap()); }

std::size_t materialize_dim_cap() {
  return std::min<std::size_t>(1024, dim_cap());
}

std::size_t max_evolve_steps() { return 1000000; }

}  // namespace qnet::config
