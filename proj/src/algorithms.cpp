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

#include "qnet/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qnet/config.hpp"
#include "qnet/error.hpp"

namespace qnet {

namespace {

constexpr double kSupportEps = 1e-12;

// e^{2 pi i idx / n} with quarter turns snapped to exact values.
Complex root_of_unity(std::size_t idx, std::size_t n) {
  idx %= n;
  if ((4 * idx) % n == 0) {
    switch (4 * idx / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

double inv_sqrt_pow2(std::size_t k) {
  if (k % 2 == 0) return std::ldexp(1.0, -static_cast<int>(k / 2));
  return std::ldexp(1.0, -static_cast<int>((k - 1) / 2)) / std::sqrt(2.0);
}

Matrix qft_matrix_signed(std::size_t k, bool inverse) {
  if (k == 0) throw InvalidInput("qft: k must be positive");
  const std::size_t n = std::size_t{1} << k;
  if (n > config::dim_cap()) throw CapacityError("qft: dimension exceeds cap");
  const double scale = inv_sqrt_pow2(k);
  Matrix f(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t idx = (m * j) % n;
      const Complex w = root_of_unity(inverse ? (n - idx) % n : idx, n);
      f(m, j) = scale * w;
    }
  }
  return f;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

Matrix qft_matrix(std::size_t k) { return qft_matrix_signed(k, false); }

Matrix qft_inverse_matrix(std::size_t k) { return qft_matrix_signed(k, true); }

Network qft_network(std::size_t k) {
  const Matrix f = qft_matrix(k);
  const std::size_t n = f.rows();
  std::vector<Network> columns;
  columns.reserve(n);
  for (std::size_t col = 0; col < n; ++col) {
    Network part(n, "column " + std::to_string(col));
    for (std::size_t row = 0; row < n; ++row) {
      const Complex a = f(row, col);
      if (a == Complex{}) continue;
      if (row == col) {
        part.push(Rotator{row, a});
      } else {
        part.push(Transitor{row, col, a});
      }
    }
    columns.push_back(std::move(part));
  }
  Network net = compose_sum(columns);
  net.set_label("qft");
  return net;
}

Matrix hadamard_all(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  const double scale = inv_sqrt_pow2(k);
  Matrix h(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) {
      h(m, j) = (std::popcount(m & j) % 2 == 0) ? scale : -scale;
    }
  }
  return h;
}

MeasureOutcome measure_register(const AugmentedState& s, std::size_t reg,
                                MeasureKind kind, Rng* rng,
                                std::size_t fixed_outcome) {
  if (reg >= s.layout.num_registers()) {
    throw InvalidInput("measure_register: register index out of range");
  }
  const double total = norm2_sq(s.amplitudes);
  if (total <= 0.0) {
    throw DegenerateState("measure_register: zero-norm state");
  }

  const std::size_t reg_dim = s.layout.register_dims()[reg];
  const std::size_t dim = s.register_dim();
  std::vector<double> probs(reg_dim, 0.0);
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
    const std::size_t m = i % dim;
    probs[s.layout.register_value(m, reg)] += std::norm(s.amplitudes[i]);
  }
  for (double& p : probs) p /= total;

  MeasureOutcome out{0, {}, s};
  out.distribution.reserve(reg_dim);
  for (std::size_t v = 0; v < reg_dim; ++v) {
    out.distribution.emplace_back(v, probs[v]);
  }

  std::size_t chosen = 0;
  switch (kind) {
    case MeasureKind::Sample: {
      if (rng == nullptr) {
        throw InvalidInput("measure_register: sample mode needs an rng");
      }
      const double u = rng->uniform01();
      double acc = 0.0;
      chosen = reg_dim - 1;
      for (std::size_t v = 0; v < reg_dim; ++v) {
        acc += probs[v];
        if (u < acc) {
          chosen = v;
          break;
        }
      }
      break;
    }
    case MeasureKind::Fixed: {
      if (fixed_outcome >= reg_dim || probs[fixed_outcome] <= 0.0) {
        throw DegenerateState(
            "measure_register: fixed outcome has zero probability");
      }
      chosen = fixed_outcome;
      break;
    }
    case MeasureKind::Distribution: {
      chosen = static_cast<std::size_t>(
          std::max_element(probs.begin(), probs.end()) - probs.begin());
      out.outcome = chosen;
      return out;  // state untouched
    }
  }

  out.outcome = chosen;
  const double kept = probs[chosen] * total;
  const double inv_norm = 1.0 / std::sqrt(kept);
  for (std::size_t i = 0; i < out.post.amplitudes.size(); ++i) {
    const std::size_t m = i % dim;
    if (s.layout.register_value(m, reg) == chosen) {
      out.post.amplitudes[i] *= inv_norm;
    } else {
      out.post.amplitudes[i] = 0.0;
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Connector-chained pipelines. Networks built by the composition laws act
// on the augmented state through an alternation of slots and connectors;
// the helpers below walk that chain explicitly so pipelines can interleave
// measurements and read off intermediate branch probabilities.

namespace {

void apply_stages(const Network& net, AugmentedState& s) {
  for (const Element& e : net.stages()) apply_element_inplace(e, s);
}

// One slot of a connector chain: the subnetwork, then the connector that
// moves its result back to the working branch. A register-only external
// writes to the working branch directly and absorbs the connector.
void apply_slot(const Network& slot, AugmentedState& s) {
  apply_stages(slot, s);
  if (slot.size() == 1) {
    if (const auto* ext = std::get_if<External>(&slot.stages().front());
        ext != nullptr && ext->register_only) {
      return;
    }
  }
  apply_element_inplace(Connector{}, s);
}

void apply_chain_entry(AugmentedState& s) {
  apply_element_inplace(Jointer{}, s);
  apply_element_inplace(Connector{}, s);
}

void apply_chain_exit(AugmentedState& s) {
  apply_element_inplace(Jointer{}, s);
}

Network per_qubit_hadamard_prep(std::size_t qubits,
                                const std::vector<std::size_t>& dims) {
  Matrix h2(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h2(0, 0) = r;
  h2(0, 1) = r;
  h2(1, 0) = r;
  h2(1, 1) = -r;
  std::vector<Network> factors;
  factors.reserve(qubits);
  for (std::size_t j = 0; j < qubits; ++j) {
    factors.push_back(tensor_lift(h2, j, dims));
  }
  Network prep = compose_product(factors);
  prep.set_label("hadamard-prep");
  return prep;
}

}  // namespace

GroverReport grover_run(std::size_t k, std::size_t target_j,
                        std::optional<std::size_t> iterations,
                        const GroverOptions& options) {
  if (k == 0) throw InvalidInput("grover: k must be positive");
  const std::size_t dim = std::size_t{1} << k;
  if (dim > config::dim_cap()) throw CapacityError("grover: dim exceeds cap");
  if (target_j >= dim) throw InvalidInput("grover: target out of range");

  const std::size_t iters = iterations.value_or(static_cast<std::size_t>(
      std::floor(std::numbers::pi * std::sqrt(static_cast<double>(dim)) /
                 4.0)));

  // Reflection about the target: identity stage plus one rotator of -2.
  Network r2(dim, "target-reflection");
  for (std::size_t m = 0; m < dim; ++m) r2.push(Rotator{m, 1.0});
  r2.push(Rotator{target_j, -2.0});
  // Reflection about |0>: rotator of +2 and a negated identity stage.
  Network r0(dim, "zero-reflection");
  r0.push(Rotator{0, 2.0});
  for (std::size_t m = 0; m < dim; ++m) r0.push(Rotator{m, -1.0});

  Network f_net;
  Network f_inv_net;
  if (options.external_qft) {
    f_net = embed_external(qft_matrix(k), false);
    f_inv_net = embed_external(qft_inverse_matrix(k), false);
  } else {
    f_net = qft_network(k);
    f_inv_net = q_of(qft_inverse_matrix(k));
    f_inv_net.set_label("qft-inverse");
  }
  const Network prep =
      options.external_prep
          ? embed_external(hadamard_all(k), false)
          : per_qubit_hadamard_prep(k, std::vector<std::size_t>(k, 2));

  AugmentedState s =
      make_augmented(basis_vector(dim, 0), RegisterLayout({dim}, true));
  apply_chain_entry(s);
  apply_slot(prep, s);

  GroverReport report;
  report.qubits_k = k;
  report.target_j = target_j;
  report.iterations = iters;

  const auto record = [&] {
    const double nrm = branch_norm_sq(s, 0);
    report.per_iteration_probs.push_back(std::norm(s.at(target_j, 0)) / nrm);
  };
  record();

  for (std::size_t t = 0; t < iters; ++t) {
    apply_slot(r2, s);
    apply_slot(f_net, s);
    apply_slot(r0, s);
    apply_slot(f_inv_net, s);
    record();
  }
  apply_chain_exit(s);

  const CVec result = project_aux(s, 1, /*renormalize=*/true);
  report.success_probability = std::norm(result[target_j]);
  return report;
}

// ---------------------------------------------------------------------
// Shor

std::vector<std::pair<std::uint64_t, std::uint64_t>> continued_fraction(
    std::uint64_t y, std::uint64_t q) {
  if (q == 0) throw InvalidInput("continued_fraction: zero denominator");
  if (y >= q) throw InvalidInput("continued_fraction: expects y < Q");

  std::vector<std::pair<std::uint64_t, std::uint64_t>> convergents;
  // h_i = a_i h_{i-1} + h_{i-2}, likewise for the denominators.
  std::uint64_t h_m1 = 1, h_m2 = 0;
  std::uint64_t k_m1 = 0, k_m2 = 1;
  std::uint64_t num = y, den = q;
  while (den != 0) {
    const std::uint64_t a = num / den;
    const std::uint64_t rem = num % den;
    const std::uint64_t h = a * h_m1 + h_m2;
    const std::uint64_t k = a * k_m1 + k_m2;
    convergents.emplace_back(h, k);
    h_m2 = h_m1;
    h_m1 = h;
    k_m2 = k_m1;
    k_m1 = k;
    num = den;
    den = rem;
  }
  return convergents;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
  if (mod == 0) throw InvalidInput("pow_mod: zero modulus");
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

ShorPostprocess shor_postprocess(std::uint64_t y, std::uint64_t q,
                                 std::uint64_t a, std::uint64_t n) {
  ShorPostprocess out;
  out.convergents = continued_fraction(y, q);
  for (const auto& [p_num, p_den] : out.convergents) {
    (void)p_num;
    if (p_den < 2 || p_den > q) continue;
    if (pow_mod(a, p_den, n) == 1) {
      out.period = p_den;
      break;
    }
  }
  if (!out.period.has_value()) return out;

  const std::uint64_t r = *out.period;
  if (r % 2 != 0) return out;
  const std::uint64_t half = pow_mod(a, r / 2, n);
  if (half == n - 1) return out;
  const std::uint64_t g = std::gcd(half + 1, n);
  const std::uint64_t g2 = std::gcd(half - 1, n);
  std::uint64_t factor = 1;
  if (g > 1 && g < n) {
    factor = g;
  } else if (g2 > 1 && g2 < n) {
    factor = g2;
  }
  if (factor > 1) {
    const std::uint64_t other = n / factor;
    out.factors = {std::min(factor, other), std::max(factor, other)};
  }
  return out;
}

std::size_t shor_default_qubits(std::uint64_t n) {
  std::size_t k = 1;
  while ((std::uint64_t{1} << k) < n * n) ++k;
  const std::size_t d2 = next_pow2(static_cast<std::size_t>(n));
  while (k > 1 && (std::size_t{1} << k) > config::dim_cap() / d2) --k;
  return k;
}

namespace {

struct ShorPipeline {
  std::uint64_t n;
  std::uint64_t a;
  std::size_t k;
  std::size_t d1;  // first register, 2^k
  std::size_t d2;  // second register, next power of two >= n
  Network prep;
  Network gmap;
  Network fourier;

  ShorPipeline(std::uint64_t n_in, std::uint64_t a_in, std::size_t k_in,
               const ShorOptions& options)
      : n(n_in), a(a_in), k(k_in), d1(std::size_t{1} << k_in),
        d2(next_pow2(static_cast<std::size_t>(n_in))) {
    const std::size_t total = d1 * d2;

    std::vector<std::size_t> qubit_dims(k, 2);
    qubit_dims.push_back(d2);
    prep = options.external_prep
               ? embed_external(kron(hadamard_all(k), Matrix::identity(d2)),
                                false)
               : per_qubit_hadamard_prep(k, qubit_dims);

    gmap = Network(total, "modular-map");
    for (std::size_t src = 0; src < d1; ++src) {
      const std::uint64_t val = pow_mod(a, src, n);
      gmap.push(Transitor{src * d2 + static_cast<std::size_t>(val),
                          src * d2, 1.0});
    }

    if (options.external_qft) {
      fourier = embed_external(kron(qft_matrix(k), Matrix::identity(d2)),
                               false);
    } else {
      fourier = tensor_lift(qft_matrix(k), 0, {d1, d2});
      fourier.set_label("qft");
    }
  }

  RegisterLayout layout() const { return RegisterLayout({d1, d2}, true); }

  /// Runs the chain up to (and including) the connector after the modular
  /// map; the second-register measurement comes next.
  AugmentedState run_until_measurement() const {
    AugmentedState s = make_augmented(basis_vector(d1 * d2, 0), layout());
    apply_chain_entry(s);
    apply_slot(prep, s);
    apply_slot(gmap, s);
    return s;
  }

  /// Finishes the chain after the mid-circuit measurement and returns the
  /// exact first-register distribution of the end state.
  std::vector<double> finish_and_distribute(AugmentedState s) const {
    apply_slot(fourier, s);
    apply_chain_exit(s);
    const MeasureOutcome mo =
        measure_register(s, 0, MeasureKind::Distribution);
    std::vector<double> probs(d1, 0.0);
    for (const auto& [y, p] : mo.distribution) probs[y] = p;
    return probs;
  }
};

void fill_peaks(const std::vector<double>& probs, ShorReport& report) {
  for (std::size_t y = 0; y < probs.size(); ++y) {
    if (probs[y] > kSupportEps) {
      report.peak_distribution.emplace_back(y, probs[y]);
    }
  }
}

// Deterministic choice for the reported outcome: most probable peak first,
// preferring one whose convergents recover a working period.
void choose_peak(const std::vector<double>& probs, std::uint64_t q,
                 std::uint64_t a, std::uint64_t n, ShorReport& report) {
  std::vector<std::size_t> order;
  for (std::size_t y = 0; y < probs.size(); ++y) {
    if (probs[y] > kSupportEps) order.push_back(y);
  }
  // Near-equal probabilities count as ties so the order falls back to
  // ascending y and stays stable under roundoff.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return probs[lhs] > probs[rhs] + 1e-9;
                   });
  for (std::size_t y : order) {
    const ShorPostprocess post = shor_postprocess(y, q, a, n);
    if (post.period.has_value()) {
      report.measured_y = y;
      report.cf_convergents = post.convergents;
      report.period_r = post.period;
      report.factors = post.factors;
      return;
    }
  }
  if (!order.empty()) {
    const std::size_t y = order.front();
    const ShorPostprocess post = shor_postprocess(y, q, a, n);
    report.measured_y = y;
    report.cf_convergents = post.convergents;
  }
}

}  // namespace

ShorReport shor_run(std::uint64_t n, std::uint64_t a, std::size_t k,
                    const ShorMeasurement& mode, const ShorOptions& options) {
  if (n < 2) throw InvalidInput("shor: N must be at least 2");
  if (a <= 1 || a >= n) throw InvalidInput("shor: require 1 < a < N");
  if (k == 0 || (std::uint64_t{1} << k) < n) {
    throw InvalidInput("shor: require 2^k >= N");
  }

  ShorReport report;
  report.n_to_factor = n;
  report.base_a = a;
  report.qubits_k = k;

  const std::uint64_t g = std::gcd(a, n);
  if (g != 1) {
    // Classical shortcut: a shares a factor with N, no pipeline needed.
    report.factors = {std::min(g, n / g), std::max(g, n / g)};
    return report;
  }

  const std::size_t d2 = next_pow2(static_cast<std::size_t>(n));
  if ((std::size_t{1} << k) > config::dim_cap() / d2) {
    throw CapacityError("shor: register dimensions exceed cap");
  }

  const ShorPipeline pipe(n, a, k, options);
  const std::uint64_t q = std::uint64_t{1} << k;
  AugmentedState mid = pipe.run_until_measurement();

  switch (mode.kind) {
    case ShorMeasurement::Kind::Sample: {
      Rng rng(mode.seed);
      const MeasureOutcome second =
          measure_register(mid, 1, MeasureKind::Sample, &rng);
      AugmentedState s = second.post;
      apply_slot(pipe.fourier, s);
      apply_chain_exit(s);
      const MeasureOutcome first =
          measure_register(s, 0, MeasureKind::Sample, &rng);
      const ShorPostprocess post =
          shor_postprocess(first.outcome, q, a, n);
      report.measured_y = first.outcome;
      report.cf_convergents = post.convergents;
      report.period_r = post.period;
      report.factors = post.factors;
      return report;
    }
    case ShorMeasurement::Kind::FixedM: {
      const std::size_t outcome =
          static_cast<std::size_t>(pow_mod(a, mode.exponent_m, n));
      const MeasureOutcome second =
          measure_register(mid, 1, MeasureKind::Fixed, nullptr, outcome);
      const std::vector<double> probs =
          pipe.finish_and_distribute(second.post);
      fill_peaks(probs, report);
      choose_peak(probs, q, a, n, report);
      return report;
    }
    case ShorMeasurement::Kind::Distribution: {
      // Exact marginal over the mid-circuit measurement.
      const MeasureOutcome second =
          measure_register(mid, 1, MeasureKind::Distribution);
      std::vector<double> probs(pipe.d1, 0.0);
      for (const auto& [u, pu] : second.distribution) {
        if (pu <= kSupportEps) continue;
        const MeasureOutcome collapsed =
            measure_register(mid, 1, MeasureKind::Fixed, nullptr, u);
        const std::vector<double> branch =
            pipe.finish_and_distribute(collapsed.post);
        for (std::size_t y = 0; y < probs.size(); ++y) {
          probs[y] += pu * branch[y];
        }
      }
      fill_peaks(probs, report);
      choose_peak(probs, q, a, n, report);
      return report;
    }
  }
  return report;
}

}  // namespace qnet
