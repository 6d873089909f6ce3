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

#include "qnet/schrodinger.hpp"

#include <cmath>

#include "qnet/config.hpp"
#include "qnet/error.hpp"
#include "qnet/linalg.hpp"

namespace qnet {

Grid::Grid(std::size_t points, double length)
    : points_n(points), length_l(length) {
  if (points == 0 || (points & (points - 1)) != 0) {
    throw InvalidInput("grid: point count must be a power of two");
  }
  if (points > config::dim_cap()) {
    throw CapacityError("grid: point count exceeds cap");
  }
  if (!(length > 0.0)) throw InvalidInput("grid: box length must be positive");
}

std::size_t EvolutionSpec::steps() const {
  if (!(dt > 0.0) || !(total_t > 0.0) || dt > total_t) {
    throw InvalidInput("evolution: require 0 < dt <= T");
  }
  const double raw = std::round(total_t / dt);
  if (raw < 1.0) return 1;
  if (raw > static_cast<double>(config::max_evolve_steps())) {
    throw CapacityError("evolution: step count exceeds limit");
  }
  return static_cast<std::size_t>(raw);
}

Matrix momentum_op(const Grid& g) {
  const std::size_t n = g.points_n;
  const double scale = 0.5 * static_cast<double>(n) / g.length_l;
  Matrix p(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    // -i (|m><m+1| - |m><m-1|) with periodic wrap.
    p(m, (m + 1) % n) += Complex(0.0, -scale);
    p(m, (m + n - 1) % n) += Complex(0.0, scale);
  }
  return p;
}

Matrix kinetic_op(const Grid& g, double mu) {
  if (!(mu > 0.0)) throw InvalidInput("kinetic: mass must be positive");
  const std::size_t n = g.points_n;
  const double ratio = static_cast<double>(n) / g.length_l;
  const double scale = ratio * ratio / (8.0 * mu);
  Matrix t(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    t(m, (m + 2) % n) += -scale;
    t(m, (m + n - 2) % n) += -scale;
    t(m, m) += 2.0 * scale;
  }
  return t;
}

Matrix potential_op(const Grid& g,
                    const std::function<double(double)>& v) {
  const std::size_t n = g.points_n;
  Matrix out(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const double value = v(g.position(m));
    if (!std::isfinite(value)) {
      throw InvalidInput("potential: non-finite value on the grid");
    }
    out(m, m) = value;
  }
  return out;
}

std::vector<double> sample_potential(const Grid& g,
                                     const EvolutionSpec& spec) {
  const std::size_t n = g.points_n;
  const Potential& pot = spec.potential;
  std::vector<double> values(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    const double x = g.position(m);
    double v = 0.0;
    switch (pot.kind) {
      case Potential::Kind::Zero:
        break;
      case Potential::Kind::Constant:
        v = pot.constant;
        break;
      case Potential::Kind::Harmonic: {
        const double d = x - 0.5 * g.length_l;
        v = 0.5 * spec.mass_mu * pot.omega * pot.omega * d * d;
        break;
      }
      case Potential::Kind::Well: {
        const double d = std::abs(x - 0.5 * g.length_l);
        v = (d <= 0.5 * pot.width) ? -pot.depth : 0.0;
        break;
      }
      case Potential::Kind::Tabulated: {
        if (pot.table.size() != n) {
          throw InvalidInput("potential: table size != grid points");
        }
        v = pot.table[m];
        break;
      }
    }
    if (!std::isfinite(v)) {
      throw InvalidInput("potential: non-finite value on the grid");
    }
    values[m] = v;
  }
  return values;
}

Matrix hamiltonian(const Grid& g, const EvolutionSpec& spec) {
  Matrix h = kinetic_op(g, spec.mass_mu);
  const std::vector<double> v = sample_potential(g, spec);
  for (std::size_t m = 0; m < g.points_n; ++m) h(m, m) += v[m];
  return h;
}

Network euler_step_network(const Grid& g, const EvolutionSpec& spec) {
  const Complex step(0.0, -spec.dt);
  Network identity_stage = q_of(Matrix::identity(g.points_n));
  identity_stage.set_label("identity");
  Network kinetic_stage = q_of(step * kinetic_op(g, spec.mass_mu));
  kinetic_stage.set_label("kinetic");
  Network potential_stage(g.points_n, "potential");
  const std::vector<double> v = sample_potential(g, spec);
  for (std::size_t m = 0; m < g.points_n; ++m) {
    const Complex amp = step * v[m];
    if (amp == Complex{}) continue;
    potential_stage.push(Rotator{m, amp});
  }
  Network net = compose_sum(
      {std::move(identity_stage), std::move(kinetic_stage),
       std::move(potential_stage)});
  net.set_label("euler-step");
  return net;
}

Network evolve_network(const Grid& g, const EvolutionSpec& spec) {
  const std::size_t steps = spec.steps();
  const Network step = euler_step_network(g, spec);
  std::vector<Network> chain(steps, step);
  Network net = compose_product(chain);
  net.set_label("euler-evolution");
  return net;
}

CVec gaussian_packet(const Grid& g, double x0, double sigma, double k0) {
  if (!(sigma > 0.0)) throw InvalidInput("gaussian: sigma must be positive");
  CVec psi(g.points_n);
  for (std::size_t m = 0; m < g.points_n; ++m) {
    const double x = g.position(m);
    const double d = x - x0;
    const double envelope = std::exp(-d * d / (4.0 * sigma * sigma));
    psi[m] = std::polar(envelope, k0 * x);
  }
  const double nrm = norm2(psi);
  if (nrm == 0.0) throw InvalidInput("gaussian: zero packet on this grid");
  for (Complex& z : psi) z /= nrm;
  return psi;
}

CVec euler_evolve_dense(const Grid& g, const EvolutionSpec& spec, CVec psi,
                        bool renormalize, std::vector<double>* norms) {
  const std::size_t steps = spec.steps();
  const Matrix h = hamiltonian(g, spec);
  const Complex step(0.0, -spec.dt);
  if (norms != nullptr) norms->push_back(norm2(psi));
  for (std::size_t s = 0; s < steps; ++s) {
    const CVec h_psi = mat_apply(h, psi);
    for (std::size_t m = 0; m < psi.size(); ++m) {
      psi[m] += step * h_psi[m];
    }
    if (renormalize) {
      const double nrm = norm2(psi);
      if (nrm > 0.0) {
        for (Complex& z : psi) z /= nrm;
      }
    }
    if (norms != nullptr) norms->push_back(norm2(psi));
  }
  return psi;
}

ExactComparison compare_exact(const Grid& g, const EvolutionSpec& spec,
                              const CVec& psi0) {
  if (psi0.size() != g.points_n) {
    throw InvalidInput("compare_exact: state dim != grid points");
  }
  const Matrix h = hamiltonian(g, spec);
  const Complex minus_i_t(0.0, -spec.total_t);
  const Matrix propagator = expm_oracle(minus_i_t * h);
  const CVec exact = mat_apply(propagator, psi0);

  ExactComparison out;
  EvolutionSpec refined = spec;
  for (int level = 0; level < 3; ++level) {
    std::vector<double>* norms = (level == 0) ? &out.norm_history : nullptr;
    const CVec euler = euler_evolve_dense(g, refined, psi0, false, norms);
    const double err = norm2(euler - exact);
    out.table.push_back({refined.dt, err});
    refined.dt *= 0.5;
  }
  out.global_error = out.table.front().global_error;
  for (std::size_t i = 0; i + 1 < out.table.size(); ++i) {
    const double ratio =
        out.table[i].global_error / out.table[i + 1].global_error;
    out.observed_orders.push_back(std::log2(ratio));
  }
  return out;
}

}  // namespace qnet
