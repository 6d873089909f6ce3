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

#include <complex>
#include <cstddef>
#include <vector>

namespace qnet {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// Dense complex matrix, row-major. The carrier of every transformation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, CVec entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const CVec& entries() const { return entries_; }
  CVec& entries() { return entries_; }
  const Complex* data() const { return entries_.data(); }
  Complex* data() { return entries_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  CVec entries_;
};

bool all_finite(const Matrix& a);
bool all_finite(const CVec& v);

double max_abs(const Matrix& a);
double max_abs(const CVec& v);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const CVec& a, const CVec& b);

/// Euclidean norm and its square.
double norm2(const CVec& v);
double norm2_sq(const CVec& v);

/// Maximum absolute column sum (the induced 1-norm).
double one_norm(const Matrix& a);

Matrix conj_transpose(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Complex& s, const Matrix& a);
/// Dense product; dispatches to the parallel kernel.
Matrix operator*(const Matrix& a, const Matrix& b);

CVec operator+(const CVec& a, const CVec& b);
CVec operator-(const CVec& a, const CVec& b);
CVec operator*(const Complex& s, const CVec& v);

/// Basis vector e_n of the given dimension.
CVec basis_vector(std::size_t dim, std::size_t n);

}  // namespace qnet
