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

#include <doctest.h>

#include "qnet/error.hpp"
#include "qnet/json_io.hpp"
#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"
#include "qnet/rng.hpp"

using namespace qnet;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("mat_apply identity and zero") {
  Rng rng(1);
  const CVec v = random_state(rng, 4);
  CHECK(max_abs_diff(mat_apply(Matrix::identity(4), v), v) == 0.0);

  const Matrix zero(3, 3);
  const CVec w = random_state(rng, 3);
  CHECK(max_abs(mat_apply(zero, w)) == 0.0);
}

TEST_CASE("mat_apply on a basis vector reads a column") {
  Rng rng(2);
  const Matrix a = random_matrix(rng, 8, 8);
  for (std::size_t n = 0; n < 8; ++n) {
    const CVec col = mat_apply(a, basis_vector(8, n));
    for (std::size_t m = 0; m < 8; ++m) {
      CHECK(col[m] == a(m, n));
    }
  }
}

TEST_CASE("mat_apply rejects a dimension mismatch") {
  const Matrix a(3, 4);
  CHECK_THROWS_AS(mat_apply(a, CVec(3)), InvalidInput);
}

TEST_CASE("kron of identities") {
  const Matrix i4 = kron(Matrix::identity(2), Matrix::identity(2));
  CHECK(max_abs_diff(i4, Matrix::identity(4)) == 0.0);
}

TEST_CASE("kron big-endian index arithmetic: (X x I)|00> = |10>") {
  Matrix x(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const Matrix lifted = kron(x, Matrix::identity(2));
  const CVec mapped = mat_apply(lifted, basis_vector(4, 0));
  CHECK(max_abs_diff(mapped, basis_vector(4, 2)) == 0.0);
}

TEST_CASE("kron mixed-product property") {
  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix a = random_matrix(rng, 2, 2);
    const Matrix b = random_matrix(rng, 2, 2);
    const Matrix c = random_matrix(rng, 2, 2);
    const Matrix d = random_matrix(rng, 2, 2);
    const Matrix lhs = kron(a, b) * kron(c, d);
    const Matrix rhs = kron(a * c, b * d);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("kron capacity cap") {
  const Matrix big(1 << 9, 1 << 9);
  const Matrix huge(1 << 9, 1 << 9);
  CHECK_THROWS_AS(kron(big, huge), CapacityError);
}

TEST_CASE("composition: A(Bv) = (AB)v") {
  Rng rng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 1 + rng.index(64);
    const Matrix a = random_matrix(rng, n, n);
    const Matrix b = random_matrix(rng, n, n);
    const CVec v = random_state(rng, n);
    CHECK(max_abs_diff(mat_apply(a, mat_apply(b, v)), mat_apply(a * b, v)) <=
          1e-12);
  }
}

TEST_CASE("expm of zero is the identity") {
  const Matrix e = expm_oracle(Matrix(5, 5));
  CHECK(max_abs_diff(e, Matrix::identity(5)) == 0.0);
}

TEST_CASE("expm of a diagonal phase matrix") {
  Matrix a(3, 3);
  const double angles[] = {0.3, -1.2, 2.5};
  for (std::size_t i = 0; i < 3; ++i) a(i, i) = Complex(0.0, angles[i]);
  const Matrix e = expm_oracle(a);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(e(i, i) - std::polar(1.0, angles[i])) <= 1e-13);
  }
}

TEST_CASE("expm of -iHt is unitary for Hermitian H") {
  Rng rng(5);
  const Matrix h = random_hermitian(rng, 8, 2.0);
  const Matrix u = expm_oracle(Complex(0.0, -1.0) * h);
  const Matrix gram = conj_transpose(u) * u;
  CHECK(max_abs_diff(gram, Matrix::identity(8)) <= 1e-10);
}

TEST_CASE("expm rejects non-square input") {
  CHECK_THROWS_AS(expm_oracle(Matrix(2, 3)), InvalidInput);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  Rng rng(6);
  SUBCASE("matmul above the cutoff") {
    const Matrix a = random_matrix(rng, 100, 90);
    const Matrix b = random_matrix(rng, 90, 110);
    CHECK(max_abs_diff(kernels::matmul(a, b), kernels::serial::matmul(a, b)) ==
          0.0);
  }
  SUBCASE("matvec above the cutoff") {
    const Matrix a = random_matrix(rng, 600, 600);
    const CVec x = random_state(rng, 600, false);
    CHECK(max_abs_diff(kernels::matvec(a, x), kernels::serial::matvec(a, x)) ==
          0.0);
  }
  SUBCASE("kron above the cutoff") {
    const Matrix a = random_matrix(rng, 20, 20);
    const Matrix b = random_matrix(rng, 15, 15);
    CHECK(max_abs_diff(kernels::kron(a, b), kernels::serial::kron(a, b)) ==
          0.0);
  }
}

TEST_CASE("matrix JSON round-trip and length validation") {
  Rng rng(7);
  const Matrix a = random_matrix(rng, 3, 5);
  const Json j = matrix_to_json(a);
  const Matrix back = matrix_from_json(j);
  CHECK(max_abs_diff(a, back) == 0.0);

  Json bad = j;
  bad["entries"].erase(0);
  CHECK_THROWS_AS(matrix_from_json(bad), InvalidInput);
}

TEST_SUITE_END();
