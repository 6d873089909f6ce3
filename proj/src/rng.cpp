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

#include "qnet/rng.hpp"

namespace qnet {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                     double scale) {
  Matrix m(rows, cols);
  for (Complex& z : m.entries()) {
    z = Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
  }
  return m;
}

Matrix random_hermitian(Rng& rng, std::size_t n, double scale) {
  const Matrix a = random_matrix(rng, n, n, scale);
  const Matrix at = conj_transpose(a);
  return Complex(0.5, 0.0) * (a + at);
}

CVec random_state(Rng& rng, std::size_t dim, bool normalized) {
  CVec v(dim);
  for (Complex& z : v) {
    z = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  if (normalized) {
    const double n = norm2(v);
    if (n > 0.0) {
      for (Complex& z : v) z /= n;
    } else {
      v[0] = 1.0;
    }
  }
  return v;
}

}  // namespace qnet
