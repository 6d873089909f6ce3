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

#include <functional>
#include <vector>

#include "qnet/matrix.hpp"
#include "qnet/network.hpp"

namespace qnet {

/// Periodic 1-D grid of N = 2^k points over a box of length L in natural
/// units; x_m = m L / N and index arithmetic wraps mod N.
struct Grid {
  Grid(std::size_t points_n, double length_l);

  std::size_t points_n;
  double length_l;

  double dx() const { return length_l / static_cast<double>(points_n); }
  double position(std::size_t m) const {
    return static_cast<double>(m) * dx();
  }
};

struct Potential {
  enum class Kind { Zero, Constant, Harmonic, Well, Tabulated };
  Kind kind = Kind::Zero;
  double constant = 0.0;  // Constant: V = c
  double omega = 1.0;     // Harmonic: V = mu omega^2 (x - L/2)^2 / 2
  double depth = 0.0;     // Well: V = -depth inside the centered window
  double width = 0.0;
  std::vector<double> table;  // Tabulated: one value per grid point
};

struct EvolutionSpec {
  double mass_mu = 1.0;
  double dt = 0.0;
  double total_t = 0.0;
  Potential potential;

  std::size_t steps() const;
};

/// Symmetrized first derivative: -i (N/L) (shift(+1) - shift(-1)) / 2 with
/// periodic wrap. Hermitian; eigenvalues (N/L) sin(2 pi q / N).
Matrix momentum_op(const Grid& g);

/// Second-difference kinetic operator; equals momentum_op^2 / (2 mu) as a
/// matrix identity. Hermitian and positive semidefinite.
Matrix kinetic_op(const Grid& g, double mu);

/// Diagonal local potential from a value function of position.
Matrix potential_op(const Grid& g, const std::function<double(double)>& v);

/// Grid samples of the named potential. Throws on non-finite values.
std::vector<double> sample_potential(const Grid& g, const EvolutionSpec& spec);

Matrix hamiltonian(const Grid& g, const EvolutionSpec& spec);

/// One Euler step (1 - i dt H) as a sum-composed network: an identity
/// stage, the kinetic stage (rotators from the diagonal, transitors to the
/// +-2 neighbors) and the diagonal potential rotators.
Network euler_step_network(const Grid& g, const EvolutionSpec& spec);

/// Connector-chained product of round(T/dt) identical Euler steps; the
/// branch-1 output is (1 - i dt H)^steps psi.
Network evolve_network(const Grid& g, const EvolutionSpec& spec);

/// Gaussian wave packet exp(-(x-x0)^2/(4 sigma^2)) e^{i k0 x}, unit norm.
CVec gaussian_packet(const Grid& g, double x0, double sigma, double k0);

/// Dense Euler stepping, matching the network evaluation; optionally
/// renormalized per step. norms, when given, receives the per-step norms
/// (including the initial one).
CVec euler_evolve_dense(const Grid& g, const EvolutionSpec& spec, CVec psi,
                        bool renormalize = false,
                        std::vector<double>* norms = nullptr);

struct ConvergenceRow {
  double dt = 0.0;
  double global_error = 0.0;
};

struct ExactComparison {
  double global_error = 0.0;          // at the requested dt
  std::vector<double> norm_history;   // per-step Euler norms
  std::vector<ConvergenceRow> table;  // dt, dt/2, dt/4
  std::vector<double> observed_orders;  // log2(err(dt)/err(dt/2)), ...
};

/// Euler power against the exact propagator from the dense exponential:
/// the global error, the per-step norm drift, and a three-row dt-halving
/// convergence table with observed orders.
ExactComparison compare_exact(const Grid& g, const EvolutionSpec& spec,
                              const CVec& psi0);

}  // namespace qnet
