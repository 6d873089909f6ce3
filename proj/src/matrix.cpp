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

#include "qnet/matrix.hpp"

#include <cmath>

#include "qnet/error.hpp"
#include "qnet/kernels.hpp"

namespace qnet {

Matrix::Matrix(std::size_t rows, std::size_t cols, CVec entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InvalidInput("matrix entry count does not match rows*cols");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool all_finite(const Matrix& a) { return all_finite(a.entries()); }

bool all_finite(const CVec& v) {
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double max_abs(const Matrix& a) { return max_abs(a.entries()); }

double max_abs(const CVec& v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("max_abs_diff: shape mismatch");
  }
  return max_abs_diff(a.entries(), b.entries());
}

double max_abs_diff(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw InvalidInput("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

double norm2_sq(const CVec& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

double norm2(const CVec& v) { return std::sqrt(norm2_sq(v)); }

double one_norm(const Matrix& a) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) col += std::abs(a(i, j));
    m = std::max(m, col);
  }
  return m;
}

Matrix conj_transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("matrix add: shape mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) {
    out.entries()[i] += b.entries()[i];
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("matrix sub: shape mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) {
    out.entries()[i] -= b.entries()[i];
  }
  return out;
}

Matrix operator*(const Complex& s, const Matrix& a) {
  Matrix out = a;
  for (Complex& z : out.entries()) z *= s;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  return kernels::matmul(a, b);
}

CVec operator+(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector add: size mismatch");
  CVec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CVec operator-(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector sub: size mismatch");
  CVec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

CVec operator*(const Complex& s, const CVec& v) {
  CVec out = v;
  for (Complex& z : out) z *= s;
  return out;
}

CVec basis_vector(std::size_t dim, std::size_t n) {
  if (n >= dim) throw InvalidInput("basis_vector: index out of range");
  CVec v(dim);
  v[n] = 1.0;
  return v;
}

}  // namespace qnet
