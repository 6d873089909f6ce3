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

#include "qnet/elements.hpp"

#include <algorithm>

#include "qnet/error.hpp"
#include "qnet/kernels.hpp"

namespace qnet {

Element build_rotator(std::size_t m, Complex amp, std::size_t dim) {
  if (m >= dim) throw InvalidInput("rotator: index out of range");
  return Rotator{m, amp};
}

Element build_transitor(std::size_t m, std::size_t n, Complex amp,
                        std::size_t dim) {
  if (m == n) {
    throw InvalidInput("transitor: m == n, use a rotator");
  }
  if (m >= dim || n >= dim) {
    throw InvalidInput("transitor: index out of range");
  }
  return Transitor{m, n, amp};
}

namespace {

void count(EvalStats* stats, std::uint64_t ops) {
  if (stats != nullptr) stats->amplitude_ops += ops;
}

void apply_register_op(const Matrix& op, AugmentedState& s, int branch,
                       EvalStats* stats) {
  const std::size_t dim = s.register_dim();
  const std::size_t offset = static_cast<std::size_t>(branch) * dim;
  CVec slice(s.amplitudes.begin() + offset,
             s.amplitudes.begin() + offset + dim);
  const CVec mapped = kernels::matvec(op, slice);
  std::copy(mapped.begin(), mapped.end(), s.amplitudes.begin() + offset);
  count(stats, static_cast<std::uint64_t>(dim) * dim);
}

struct Applier {
  AugmentedState& s;
  EvalStats* stats;

  void operator()(const Rotator& r) {
    const std::size_t dim = s.register_dim();
    if (r.m >= dim) throw InvalidInput("rotator: index out of range");
    s.amplitudes[dim + r.m] += r.amp * s.amplitudes[r.m];
    count(stats, 1);
  }

  void operator()(const Transitor& t) {
    const std::size_t dim = s.register_dim();
    if (t.m >= dim || t.n >= dim) {
      throw InvalidInput("transitor: index out of range");
    }
    s.amplitudes[dim + t.m] += t.amp * s.amplitudes[t.n];
    count(stats, 1);
  }

  void operator()(const Jointer&) {
    const std::size_t dim = s.register_dim();
    for (std::size_t m = 0; m < dim; ++m) {
      s.amplitudes[dim + m] = s.amplitudes[m];
      s.amplitudes[m] = 0.0;
    }
    count(stats, 2 * static_cast<std::uint64_t>(dim));
  }

  void operator()(const Connector&) {
    const std::size_t dim = s.register_dim();
    for (std::size_t m = 0; m < dim; ++m) {
      s.amplitudes[m] = s.amplitudes[dim + m];
      s.amplitudes[dim + m] = 0.0;
    }
    count(stats, 2 * static_cast<std::uint64_t>(dim));
  }

  void operator()(const ProjectorD&) {
    const std::size_t dim = s.register_dim();
    std::fill(s.amplitudes.begin(), s.amplitudes.begin() + dim, Complex{});
    count(stats, static_cast<std::uint64_t>(dim));
  }

  void operator()(const ProjectorP&) {
    const std::size_t dim = s.register_dim();
    std::fill(s.amplitudes.begin() + dim, s.amplitudes.end(), Complex{});
    count(stats, static_cast<std::uint64_t>(dim));
  }

  void operator()(const External& e) {
    const std::size_t dim = s.register_dim();
    if (!e.op.is_square() || e.op.rows() != dim) {
      throw InvalidInput("external: operator dim != register dim");
    }
    if (e.register_only) {
      apply_register_op(e.op, s, 0, stats);
      apply_register_op(e.op, s, 1, stats);
      return;
    }
    // Universal-network form: branch-1 += op * branch-0.
    CVec branch0(s.amplitudes.begin(), s.amplitudes.begin() + dim);
    const CVec mapped = kernels::matvec(e.op, branch0);
    for (std::size_t m = 0; m < dim; ++m) s.amplitudes[dim + m] += mapped[m];
    count(stats, static_cast<std::uint64_t>(dim) * dim +
                     static_cast<std::uint64_t>(dim));
  }
};

Matrix adjacent_exchange(std::size_t lo, std::size_t dim) {
  Matrix e = Matrix::identity(dim);
  e(lo, lo) = 0.0;
  e(lo + 1, lo + 1) = 0.0;
  e(lo, lo + 1) = 1.0;
  e(lo + 1, lo) = 1.0;
  return e;
}

Matrix product_of(const std::vector<Matrix>& factors, std::size_t dim) {
  Matrix out = Matrix::identity(dim);
  for (const Matrix& f : factors) out = kernels::matmul(out, f);
  return out;
}

}  // namespace

void apply_element_inplace(const Element& e, AugmentedState& s,
                           EvalStats* stats) {
  if (!s.layout.has_aux()) {
    throw InvalidInput("apply_element: layout has no auxiliary qubit");
  }
  std::visit(Applier{s, stats}, e);
}

AugmentedState apply_element(const Element& e, const AugmentedState& s,
                             EvalStats* stats) {
  AugmentedState out = s;
  apply_element_inplace(e, out, stats);
  return out;
}

std::vector<Matrix> exchange_factors(std::size_t m, std::size_t n,
                                     std::size_t dim) {
  if (m >= dim || n >= dim) {
    throw InvalidInput("exchange_gate: index out of range");
  }
  std::vector<Matrix> factors;
  if (m == n) return factors;
  // The construction formula lists the adjacent factors with index
  // increasing from the left; that ordering moves |n> only one step, so
  // the factors are emitted reversed, which makes the product the cycle
  // carrying |n> all the way to |m>. exchange_gate_printed_order keeps
  // the literal ordering for the verification report.
  if (n < m) {
    for (std::size_t j = m - 1; ; --j) {
      factors.push_back(adjacent_exchange(j, dim));
      if (j == n) break;
    }
  } else {
    for (std::size_t j = m; j < n; ++j) {
      factors.push_back(adjacent_exchange(j, dim));
    }
  }
  return factors;
}

Matrix exchange_gate(std::size_t m, std::size_t n, std::size_t dim) {
  return product_of(exchange_factors(m, n, dim), dim);
}

Matrix exchange_gate_printed_order(std::size_t m, std::size_t n,
                                   std::size_t dim) {
  std::vector<Matrix> factors = exchange_factors(m, n, dim);
  std::reverse(factors.begin(), factors.end());
  return product_of(factors, dim);
}

Matrix materialize_element(const Element& e, std::size_t dim) {
  Matrix out(2 * dim, 2 * dim);
  if (const auto* r = std::get_if<Rotator>(&e)) {
    if (r->m >= dim) throw InvalidInput("rotator: index out of range");
    out = Matrix::identity(2 * dim);
    out(dim + r->m, r->m) += r->amp;
  } else if (const auto* t = std::get_if<Transitor>(&e)) {
    if (t->m >= dim || t->n >= dim) {
      throw InvalidInput("transitor: index out of range");
    }
    out = Matrix::identity(2 * dim);
    out(dim + t->m, t->n) += t->amp;
  } else if (std::holds_alternative<Jointer>(e)) {
    for (std::size_t i = 0; i < dim; ++i) out(dim + i, i) = 1.0;
  } else if (std::holds_alternative<Connector>(e)) {
    for (std::size_t i = 0; i < dim; ++i) out(i, dim + i) = 1.0;
  } else if (std::holds_alternative<ProjectorD>(e)) {
    for (std::size_t i = 0; i < dim; ++i) out(dim + i, dim + i) = 1.0;
  } else if (std::holds_alternative<ProjectorP>(e)) {
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  } else {
    const auto& ext = std::get<External>(e);
    if (!ext.op.is_square() || ext.op.rows() != dim) {
      throw InvalidInput("external: operator dim != register dim");
    }
    if (ext.register_only) {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          out(i, j) = ext.op(i, j);
          out(dim + i, dim + j) = ext.op(i, j);
        }
      }
    } else {
      out = Matrix::identity(2 * dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          out(dim + i, j) += ext.op(i, j);
        }
      }
    }
  }
  return out;
}

}  // namespace qnet
