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

#include "qnet/network.hpp"

#include <utility>

#include "qnet/config.hpp"
#include "qnet/error.hpp"
#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"

namespace qnet {

namespace {

struct IndexBound {
  std::size_t dim;

  void operator()(const Rotator& r) const {
    if (r.m >= dim) throw InvalidInput("network: rotator index out of range");
  }
  void operator()(const Transitor& t) const {
    if (t.m >= dim || t.n >= dim) {
      throw InvalidInput("network: transitor index out of range");
    }
    if (t.m == t.n) throw InvalidInput("network: transitor with m == n");
  }
  void operator()(const Jointer&) const {}
  void operator()(const Connector&) const {}
  void operator()(const ProjectorD&) const {}
  void operator()(const ProjectorP&) const {}
  void operator()(const External& e) const {
    if (!e.op.is_square() || e.op.rows() != dim) {
      throw InvalidInput("network: external operator dim mismatch");
    }
  }
};

bool is_pure(const Element& e) {
  return std::holds_alternative<Rotator>(e) ||
         std::holds_alternative<Transitor>(e);
}

bool is_register_only_external(const Network& net) {
  if (net.size() != 1) return false;
  const auto* ext = std::get_if<External>(&net.stages().front());
  return ext != nullptr && ext->register_only;
}

void check_equal_dims(const std::vector<Network>& nets, const char* what) {
  for (const Network& n : nets) {
    if (n.dim() != nets.front().dim()) {
      throw CompositionError(std::string(what) + ": mixed dimensions");
    }
  }
}

}  // namespace

Network::Network(std::size_t dim, std::string label)
    : dim_(dim), label_(std::move(label)) {}

bool Network::pure_elements() const {
  for (const Element& e : stages_) {
    if (!is_pure(e)) return false;
  }
  return true;
}

void Network::push(Element e) {
  std::visit(IndexBound{dim_}, e);
  stages_.push_back(std::move(e));
}

void Network::add_mark(StageMark mark) {
  if (mark.begin > mark.end || mark.end > stages_.size()) {
    throw InvalidInput("network: mark range out of bounds");
  }
  marks_.push_back(std::move(mark));
}

Network Network::interior() const {
  Network out = *this;
  out.identity_plus_ = false;
  return out;
}

Network q_of(const Matrix& u, double zero_threshold) {
  if (!u.is_square()) throw InvalidInput("q_of: matrix must be square");
  Network net(u.rows());
  for (std::size_t m = 0; m < u.rows(); ++m) {
    for (std::size_t n = 0; n < u.cols(); ++n) {
      const Complex a = u(m, n);
      if (a == Complex{} || std::abs(a) <= zero_threshold) continue;
      if (m == n) {
        net.push(Rotator{m, a});
      } else {
        net.push(Transitor{m, n, a});
      }
    }
  }
  return net;
}

Network inverse_network(const Network& net) {
  if (!net.pure_elements()) {
    throw CompositionError(
        "inverse_network: network contains non-invertible elements");
  }
  Network out(net.dim(), net.label().empty() ? "" : "inverse " + net.label());
  for (const Element& e : net.stages()) {
    if (const auto* r = std::get_if<Rotator>(&e)) {
      out.push(Rotator{r->m, -r->amp});
    } else {
      const auto& t = std::get<Transitor>(e);
      out.push(Transitor{t.m, t.n, -t.amp});
    }
  }
  return out;
}

AugmentedState evaluate(const Network& net, const AugmentedState& s,
                        EvalStats* stats) {
  if (!s.layout.has_aux()) {
    throw InvalidInput("evaluate: layout has no auxiliary qubit");
  }
  if (s.register_dim() != net.dim()) {
    throw InvalidInput("evaluate: state dim != network dim");
  }
  AugmentedState out = s;
  for (const Element& e : net.stages()) {
    apply_element_inplace(e, out, stats);
  }
  if (net.identity_plus()) {
    for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
      out.amplitudes[i] += s.amplitudes[i];
    }
    if (stats != nullptr) stats->amplitude_ops += out.amplitudes.size();
  }
  return out;
}

Network compose_sum(const std::vector<Network>& nets) {
  if (nets.empty()) throw InvalidInput("compose_sum: empty list");
  check_equal_dims(nets, "compose_sum");
  Network out(nets.front().dim(), "sum");
  for (std::size_t i = 0; i < nets.size(); ++i) {
    const Network& part = nets[i];
    if (!part.pure_elements() || part.identity_plus()) {
      throw CompositionError("compose_sum: parts must be rotator/transitor "
                             "networks");
    }
    const std::size_t begin = out.size();
    for (const Element& e : part.stages()) out.push(e);
    out.add_mark({part.label().empty() ? "part " + std::to_string(i)
                                       : part.label(),
                  begin, out.size()});
  }
  return out;
}

Network compose_product(const std::vector<Network>& nets) {
  if (nets.empty()) throw InvalidInput("compose_product: empty list");
  check_equal_dims(nets, "compose_product");
  Network out(nets.front().dim(), "product");
  // Entry pair: raise then lower, the input-branch projector of the
  // composition formula.
  out.push(Jointer{});
  out.push(Connector{});
  // The first listed network is the leftmost matrix factor and therefore
  // acts last; slots are laid down in reverse list order.
  for (std::size_t k = nets.size(); k-- > 0;) {
    const Network& slot = nets[k];
    const std::size_t begin = out.size();
    for (const Element& e : slot.stages()) out.push(e);
    const std::string label =
        slot.label().empty() ? "slot " + std::to_string(k) : slot.label();
    out.add_mark({label, begin, out.size()});
    // A foreign register-only operator already leaves its result on the
    // working branch; it absorbs the slot's connector.
    if (!is_register_only_external(slot)) {
      out.push(Connector{});
    }
  }
  out.push(Jointer{});
  out.set_identity_plus(true);
  return out;
}

Network two_register_lift(const std::vector<Network>& nets) {
  if (nets.empty()) throw InvalidInput("two_register_lift: empty list");
  check_equal_dims(nets, "two_register_lift");
  const std::size_t d = nets.front().dim();
  const std::size_t cap = config::dim_cap();
  if (d != 0 && d > cap / d) {
    throw CapacityError("two_register_lift: lifted dimension exceeds cap");
  }

  // Lift each slot so it acts on the out register of an [in, out] layout;
  // the in register (the most significant factor) is left untouched.
  std::vector<Network> lifted;
  lifted.reserve(nets.size());
  for (const Network& src : nets) {
    Network dst(d * d, src.label());
    for (const Element& e : src.stages()) {
      if (const auto* r = std::get_if<Rotator>(&e)) {
        for (std::size_t i = 0; i < d; ++i) {
          dst.push(Rotator{i * d + r->m, r->amp});
        }
      } else if (const auto* t = std::get_if<Transitor>(&e)) {
        for (std::size_t i = 0; i < d; ++i) {
          dst.push(Transitor{i * d + t->m, i * d + t->n, t->amp});
        }
      } else if (const auto* ext = std::get_if<External>(&e)) {
        dst.push(External{kron(Matrix::identity(d), ext->op),
                          ext->register_only});
      } else {
        dst.push(e);  // aux-only elements are register-size agnostic
      }
    }
    lifted.push_back(std::move(dst));
  }

  Network out = compose_product(lifted);
  // The two-register form is the bare interior: the in register carries
  // the preserved input, so no identity term is added.
  out.set_identity_plus(false);
  out.set_label("two-register product");
  return out;
}

Network tensor_lift(const Matrix& u, std::size_t slot,
                    const std::vector<std::size_t>& dims) {
  if (!u.is_square()) throw InvalidInput("tensor_lift: matrix must be square");
  if (slot >= dims.size()) throw InvalidInput("tensor_lift: slot out of range");
  if (u.rows() != dims[slot]) {
    throw InvalidInput("tensor_lift: matrix dim != slot dim");
  }
  const std::size_t cap = config::dim_cap();
  std::size_t total = 1;
  for (std::size_t dcur : dims) {
    if (dcur == 0) throw InvalidInput("tensor_lift: zero dimension");
    if (total > cap / dcur) {
      throw CapacityError("tensor_lift: total dimension exceeds cap");
    }
    total *= dcur;
  }

  std::size_t stride = 1;
  for (std::size_t j = slot + 1; j < dims.size(); ++j) stride *= dims[j];
  const std::size_t block = stride * dims[slot];
  const std::size_t outer = total / block;

  Network net(total, "lift slot " + std::to_string(slot));
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < u.cols(); ++j) {
      const Complex a = u(i, j);
      if (a == Complex{}) continue;
      for (std::size_t hi = 0; hi < outer; ++hi) {
        for (std::size_t lo = 0; lo < stride; ++lo) {
          const std::size_t base = hi * block + lo;
          const std::size_t m = base + i * stride;
          const std::size_t n = base + j * stride;
          if (m == n) {
            net.push(Rotator{m, a});
          } else {
            net.push(Transitor{m, n, a});
          }
        }
      }
    }
  }
  return net;
}

Matrix materialize_network(const Network& net) {
  if (net.dim() > config::materialize_dim_cap()) {
    throw CapacityError("materialize_network: dimension exceeds cap");
  }
  Matrix m = Matrix::identity(2 * net.dim());
  for (const Element& e : net.stages()) {
    m = kernels::matmul(materialize_element(e, net.dim()), m);
  }
  if (net.identity_plus()) {
    m = m + Matrix::identity(2 * net.dim());
  }
  return m;
}

Matrix network_action(const Network& net) {
  const std::size_t dim = net.dim();
  if (dim > config::materialize_dim_cap()) {
    throw CapacityError("network_action: dimension exceeds cap");
  }
  const RegisterLayout layout({dim}, true);
  Matrix action(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const AugmentedState out =
        evaluate(net, make_augmented(basis_vector(dim, col), layout));
    for (std::size_t row = 0; row < dim; ++row) {
      action(row, col) = out.at(row, 1);
    }
  }
  return action;
}

Network embed_external(const Matrix& op, bool register_only) {
  if (!op.is_square()) {
    throw InvalidInput("embed_external: matrix must be square");
  }
  Network net(op.rows(), "external");
  net.push(External{op, register_only});
  return net;
}

bool swap_slot(Network& net, const std::string& label,
               const Network& replacement) {
  if (replacement.dim() != net.dim()) {
    throw CompositionError("swap_slot: dimension mismatch");
  }
  const std::vector<StageMark> marks = net.marks();
  for (std::size_t mi = 0; mi < marks.size(); ++mi) {
    if (marks[mi].label != label) continue;
    const StageMark target = marks[mi];
    Network out(net.dim(), net.label());
    out.set_identity_plus(net.identity_plus());
    const std::vector<Element>& old = net.stages();
    for (std::size_t i = 0; i < target.begin; ++i) out.push(old[i]);
    const std::size_t new_begin = out.size();
    for (const Element& e : replacement.stages()) out.push(e);
    const std::size_t new_end = out.size();
    for (std::size_t i = target.end; i < old.size(); ++i) out.push(old[i]);
    const std::ptrdiff_t shift =
        static_cast<std::ptrdiff_t>(new_end) -
        static_cast<std::ptrdiff_t>(target.end);
    for (const StageMark& m : marks) {
      if (m.label == label) {
        out.add_mark({label, new_begin, new_end});
      } else if (m.begin >= target.end) {
        out.add_mark({m.label,
                      static_cast<std::size_t>(
                          static_cast<std::ptrdiff_t>(m.begin) + shift),
                      static_cast<std::size_t>(
                          static_cast<std::ptrdiff_t>(m.end) + shift)});
      } else {
        out.add_mark(m);
      }
    }
    net = std::move(out);
    return true;
  }
  return false;
}

}  // namespace qnet
