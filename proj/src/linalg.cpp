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

#include "qnet/linalg.hpp"

#include <cmath>

#include "qnet/config.hpp"
#include "qnet/error.hpp"
#include "qnet/kernels.hpp"

namespace qnet {

CVec mat_apply(const Matrix& a, const CVec& v) {
  if (a.cols() != v.size()) {
    throw InvalidInput("mat_apply: operator cols != vector dim");
  }
  return kernels::matvec(a, v);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t cap = config::dim_cap();
  if ((b.rows() != 0 && a.rows() > cap / b.rows()) ||
      (b.cols() != 0 && a.cols() > cap / b.cols())) {
    throw CapacityError("kron: result dimension exceeds cap");
  }
  return kernels::kron(a, b);
}

Matrix expm_oracle(const Matrix& a) {
  if (!a.is_square()) throw InvalidInput("expm: matrix must be square");
  const std::size_t n = a.rows();
  if (n > config::expm_dim_cap()) {
    throw CapacityError("expm: dimension exceeds cap");
  }
  if (n == 0) return Matrix();

  // Scale so the 1-norm is at most 1/2, run the Taylor series to full
  // double precision, then undo the scaling by repeated squaring.
  const double nrm = one_norm(a);
  int squarings = 0;
  if (nrm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  }
  const double scale = std::ldexp(1.0, -squarings);

  Matrix b = Complex(scale, 0.0) * a;
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = kernels::matmul(term, b);
    const Complex inv_k(1.0 / static_cast<double>(k), 0.0);
    for (Complex& z : term.entries()) z *= inv_k;
    result = result + term;
    if (one_norm(term) <= 1e-17 * one_norm(result)) break;
  }
  for (int s = 0; s < squarings; ++s) {
    result = kernels::matmul(result, result);
  }
  return result;
}

}  // namespace qnet
