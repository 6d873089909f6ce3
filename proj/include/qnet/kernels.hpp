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

#include "qnet/matrix.hpp"

namespace qnet::kernels {

// Serial reference implementations. These are the ground truth the
// OpenMP kernels are tested against and the fallback for small sizes.
namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b);
CVec matvec(const Matrix& a, const CVec& x);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace serial

// OpenMP-parallel kernels. Work is split across rows of the output, so
// the per-entry summation order is unchanged and results are bit-identical
// to the serial reference. Below a size threshold they take the serial path.
Matrix matmul(const Matrix& a, const Matrix& b);
CVec matvec(const Matrix& a, const CVec& x);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace qnet::kernels
