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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qnet/matrix.hpp"
#include "qnet/network.hpp"
#include "qnet/registers.hpp"
#include "qnet/rng.hpp"

namespace qnet {

/// F_mn = e^{2 pi i m n / 2^k} / sqrt(2^k). Quarter-turn phases are snapped
/// to exact values so small transforms stay exact in double arithmetic.
Matrix qft_matrix(std::size_t k);
Matrix qft_inverse_matrix(std::size_t k);

/// Entire network for the Fourier transform, assembled column by column
/// through the sum rule. Branch-1 action equals qft_matrix(k) * psi.
Network qft_network(std::size_t k);

/// k-qubit Hadamard transform, (-1)^{popcount(m & n)} / 2^{k/2}.
Matrix hadamard_all(std::size_t k);

// ---------------------------------------------------------------------
// Measurement

enum class MeasureKind { Sample, Fixed, Distribution };

struct MeasureOutcome {
  std::size_t outcome = 0;  // argmax for Distribution mode
  std::vector<std::pair<std::size_t, double>> distribution;
  AugmentedState post;
};

/// Projective measurement of one register (a non-unitary computing step).
/// Probabilities come from the normalized amplitudes over both aux
/// branches; the post-state is projected and renormalized. Sample mode
/// needs an Rng; Distribution mode leaves the state untouched.
MeasureOutcome measure_register(const AugmentedState& s, std::size_t reg,
                                MeasureKind kind, Rng* rng = nullptr,
                                std::size_t fixed_outcome = 0);

// ---------------------------------------------------------------------
// Grover

struct GroverReport {
  std::size_t qubits_k = 0;
  std::size_t target_j = 0;
  std::size_t iterations = 0;
  double success_probability = 0.0;
  /// Probability of the target after t iterations, t = 0..iterations.
  std::vector<double> per_iteration_probs;
};

struct GroverOptions {
  bool external_qft = false;   // splice the dense F in place of its network
  bool external_prep = false;  // same for the Hadamard preparation
};

/// Connector-chained search pipeline: Hadamard preparation, then per
/// iteration the reflection about the target, F, the reflection about
/// |0>, and F^{-1}. Default iteration count floor(pi sqrt(2^k) / 4).
GroverReport grover_run(std::size_t k, std::size_t target_j,
                        std::optional<std::size_t> iterations = {},
                        const GroverOptions& options = {});

// ---------------------------------------------------------------------
// Shor

/// Convergents (p, q) of y / Q in lowest terms, ascending denominator.
std::vector<std::pair<std::uint64_t, std::uint64_t>> continued_fraction(
    std::uint64_t y, std::uint64_t q);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod);

struct ShorPostprocess {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> convergents;
  std::optional<std::uint64_t> period;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
};

/// Classical tail of the pipeline: continued fractions on y / 2^k, period
/// candidates from the convergent denominators, factors from
/// gcd(a^{r/2} +- 1, N) when the recovered period allows it.
ShorPostprocess shor_postprocess(std::uint64_t y, std::uint64_t q,
                                 std::uint64_t a, std::uint64_t n);

struct ShorMeasurement {
  enum class Kind { Sample, FixedM, Distribution };
  Kind kind = Kind::Distribution;
  std::uint64_t seed = 0;        // Sample: drives both measurements
  std::uint64_t exponent_m = 0;  // FixedM: second register collapses to
                                 // a^m mod N
};

struct ShorOptions {
  bool external_qft = false;
  bool external_prep = false;
};

struct ShorReport {
  std::uint64_t n_to_factor = 0;
  std::uint64_t base_a = 0;
  std::size_t qubits_k = 0;
  std::optional<std::uint64_t> measured_y;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cf_convergents;
  std::optional<std::uint64_t> period_r;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
  /// Exact first-register distribution support (Distribution/FixedM modes).
  std::vector<std::pair<std::uint64_t, double>> peak_distribution;
};

/// The five-step factoring pipeline over two registers plus the auxiliary
/// qubit: Hadamard preparation of the first register, the modular map
/// n |-> (n, a^n mod N) as a transitor list, a projective measurement of
/// the second register, the Fourier transform of the first register, and
/// the final measurement with classical post-processing. Distribution mode
/// marginalizes the mid-circuit measurement and reports exact peaks.
ShorReport shor_run(std::uint64_t n, std::uint64_t a, std::size_t k,
                    const ShorMeasurement& mode = {},
                    const ShorOptions& options = {});

/// Default first-register size: ceil(log2(N^2)), clamped to the cap.
std::size_t shor_default_qubits(std::uint64_t n);

}  // namespace qnet
