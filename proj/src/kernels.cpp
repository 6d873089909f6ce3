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

#include "qnet/kernels.hpp"

#include <cstdint>

#include "qnet/error.hpp"

namespace qnet::kernels {

namespace {

// Work below these element counts is not worth a parallel region.
constexpr std::size_t kMatmulParallelCutoff = 64 * 64;
constexpr std::size_t kMatvecParallelCutoff = 512 * 512;
constexpr std::size_t kKronParallelCutoff = 256 * 256;

void check_matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matmul: inner dim mismatch");
}

void check_matvec(const Matrix& a, const CVec& x) {
  if (a.cols() != x.size()) throw InvalidInput("matvec: dim mismatch");
}

// Shared inner loops; row ranges let the parallel kernels reuse the exact
// serial summation order per output entry.
void matmul_rows(const Matrix& a, const Matrix& b, Matrix& c,
                 std::size_t row_begin, std::size_t row_end) {
  const std::size_t n = b.cols();
  const std::size_t k_dim = a.cols();
  for (std::size_t i = row_begin; i < row_end; ++i) {
    Complex* ci = c.data() + i * n;
    for (std::size_t k = 0; k < k_dim; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      const Complex* bk = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

void matvec_rows(const Matrix& a, const CVec& x, CVec& y,
                 std::size_t row_begin, std::size_t row_end) {
  for (std::size_t i = row_begin; i < row_end; ++i) {
    const Complex* ai = a.data() + i * a.cols();
    Complex acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
}

void kron_rows(const Matrix& a, const Matrix& b, Matrix& out,
               std::size_t a_row_begin, std::size_t a_row_end) {
  for (std::size_t i = a_row_begin; i < a_row_end; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
}

}  // namespace

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_matmul(a, b);
  Matrix c(a.rows(), b.cols());
  matmul_rows(a, b, c, 0, a.rows());
  return c;
}

CVec matvec(const Matrix& a, const CVec& x) {
  check_matvec(a, x);
  CVec y(a.rows());
  matvec_rows(a, x, y, 0, a.rows());
  return y;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  kron_rows(a, b, out, 0, a.rows());
  return out;
}

}  // namespace serial

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_matmul(a, b);
  const std::size_t work = a.rows() * b.cols();
  if (work < kMatmulParallelCutoff) return serial::matmul(a, b);
  Matrix c(a.rows(), b.cols());
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    matmul_rows(a, b, c, static_cast<std::size_t>(i),
                static_cast<std::size_t>(i + 1));
  }
  return c;
}

CVec matvec(const Matrix& a, const CVec& x) {
  check_matvec(a, x);
  if (a.rows() * a.cols() < kMatvecParallelCutoff) {
    return serial::matvec(a, x);
  }
  CVec y(a.rows());
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    matvec_rows(a, x, y, static_cast<std::size_t>(i),
                static_cast<std::size_t>(i + 1));
  }
  return y;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t out_size =
      a.rows() * b.rows() * a.cols() * b.cols();
  if (out_size < kKronParallelCutoff) return serial::kron(a, b);
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    kron_rows(a, b, out, static_cast<std::size_t>(i),
              static_cast<std::size_t>(i + 1));
  }
  return out;
}

}  // namespace qnet::kernels
