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

// Compares the serial reference kernels with the OpenMP kernels and checks
// that both produce identical entries.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "qnet/kernels.hpp"
#include "qnet/rng.hpp"

namespace {

using qnet::CVec;
using qnet::Matrix;

double time_ms(const std::function<void()>& fn, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() /
         repeats;
}

void report(const char* name, std::size_t n, double serial_ms,
            double parallel_ms, double diff) {
  std::printf("%-8s n=%-5zu serial %9.3f ms   omp %9.3f ms   speedup %5.2fx"
              "   max|diff| %g\n",
              name, n, serial_ms, parallel_ms, serial_ms / parallel_ms, diff);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  qnet::Rng rng(12345);

  for (std::size_t n : {64, 128, 256, 512}) {
    const Matrix a = qnet::random_matrix(rng, n, n);
    const Matrix b = qnet::random_matrix(rng, n, n);
    Matrix serial_out, parallel_out;
    const int reps = n <= 128 ? 20 : 5;
    const double ts =
        time_ms([&] { serial_out = qnet::kernels::serial::matmul(a, b); },
                reps);
    const double tp =
        time_ms([&] { parallel_out = qnet::kernels::matmul(a, b); }, reps);
    report("matmul", n, ts, tp, qnet::max_abs_diff(serial_out, parallel_out));
  }

  for (std::size_t n : {512, 1024, 2048, 4096}) {
    const Matrix a = qnet::random_matrix(rng, n, n);
    const CVec x = qnet::random_state(rng, n, false);
    CVec serial_out, parallel_out;
    const int reps = n <= 1024 ? 50 : 10;
    const double ts =
        time_ms([&] { serial_out = qnet::kernels::serial::matvec(a, x); },
                reps);
    const double tp =
        time_ms([&] { parallel_out = qnet::kernels::matvec(a, x); }, reps);
    report("matvec", n, ts, tp, qnet::max_abs_diff(serial_out, parallel_out));
  }

  for (std::size_t n : {16, 32, 64}) {
    const Matrix a = qnet::random_matrix(rng, n, n);
    const Matrix b = qnet::random_matrix(rng, n, n);
    Matrix serial_out, parallel_out;
    const double ts = time_ms(
        [&] { serial_out = qnet::kernels::serial::kron(a, b); }, 5);
    const double tp =
        time_ms([&] { parallel_out = qnet::kernels::kron(a, b); }, 5);
    report("kron", n, ts, tp, qnet::max_abs_diff(serial_out, parallel_out));
  }

  return 0;
}
