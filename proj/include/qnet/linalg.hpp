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

namespace qnet {

/// result_m = sum_n A_mn v_n. Throws InvalidInput on dimension mismatch.
CVec mat_apply(const Matrix& a, const CVec& v);

/// Kronecker product, (kron(A,B))_{(i*Br+k),(j*Bc+l)} = A_ij * B_kl.
/// Throws CapacityError when the result dimensions exceed the cap.
Matrix kron(const Matrix& a, const Matrix& b);

/// Dense matrix exponential via scaling-and-squaring with a Taylor core.
/// Accurate to ~1e-12 relative; for skew-Hermitian input the result is
/// unitary to 1e-10. An oracle, not a hot path.
Matrix expm_oracle(const Matrix& a);

}  // namespace qnet
