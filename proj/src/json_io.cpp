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

#include "qnet/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qnet/error.hpp"

namespace qnet {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidInput("json: complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json element_to_json(const Element& e) {
  Json j;
  if (const auto* r = std::get_if<Rotator>(&e)) {
    j["type"] = "rotator";
    j["m"] = r->m;
    j["amp"] = complex_to_json(r->amp);
  } else if (const auto* t = std::get_if<Transitor>(&e)) {
    j["type"] = "transitor";
    j["m"] = t->m;
    j["n"] = t->n;
    j["amp"] = complex_to_json(t->amp);
  } else if (std::holds_alternative<Jointer>(e)) {
    j["type"] = "jointer";
  } else if (std::holds_alternative<Connector>(e)) {
    j["type"] = "connector";
  } else if (std::holds_alternative<ProjectorD>(e)) {
    j["type"] = "proj_d";
  } else if (std::holds_alternative<ProjectorP>(e)) {
    j["type"] = "proj_p";
  } else {
    const auto& ext = std::get<External>(e);
    j["type"] = "external";
    j["matrix"] = matrix_to_json(ext.op);
    j["register_only"] = ext.register_only;
  }
  return j;
}

Element element_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "rotator") {
    return Rotator{j.at("m").get<std::size_t>(),
                   complex_from_json(j.at("amp"))};
  }
  if (type == "transitor") {
    return Transitor{j.at("m").get<std::size_t>(),
                     j.at("n").get<std::size_t>(),
                     complex_from_json(j.at("amp"))};
  }
  if (type == "jointer") return Jointer{};
  if (type == "connector") return Connector{};
  if (type == "proj_d") return ProjectorD{};
  if (type == "proj_p") return ProjectorP{};
  if (type == "external") {
    return External{matrix_from_json(j.at("matrix")),
                    j.at("register_only").get<bool>()};
  }
  throw InvalidInput("json: unknown element type '" + type + "'");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (const Complex& z : m.entries()) entries.push_back(complex_to_json(z));
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw InvalidInput("json: matrix entry count does not match rows*cols");
  }
  CVec data;
  data.reserve(entries.size());
  for (const Json& e : entries) data.push_back(complex_from_json(e));
  Matrix m(rows, cols, std::move(data));
  if (!all_finite(m)) throw InvalidInput("json: non-finite matrix entry");
  return m;
}

Json state_to_json(const AugmentedState& s) {
  Json j;
  j["register_dims"] = s.layout.register_dims();
  j["has_aux"] = s.layout.has_aux();
  Json amps = Json::array();
  for (const Complex& z : s.amplitudes) amps.push_back(complex_to_json(z));
  j["amplitudes"] = std::move(amps);
  return j;
}

AugmentedState state_from_json(const Json& j) {
  RegisterLayout layout(j.at("register_dims").get<std::vector<std::size_t>>(),
                        j.at("has_aux").get<bool>());
  const Json& amps = j.at("amplitudes");
  if (!amps.is_array() || amps.size() != layout.total_dim()) {
    throw InvalidInput("json: amplitude count does not match layout");
  }
  CVec data;
  data.reserve(amps.size());
  for (const Json& e : amps) data.push_back(complex_from_json(e));
  if (!all_finite(data)) throw InvalidInput("json: non-finite amplitude");
  return AugmentedState{std::move(layout), std::move(data)};
}

Json network_to_json(const Network& net) {
  Json j;
  j["dim"] = net.dim();
  j["label"] = net.label();
  j["identity_plus"] = net.identity_plus();
  Json stages = Json::array();
  for (const Element& e : net.stages()) stages.push_back(element_to_json(e));
  j["stages"] = std::move(stages);
  if (!net.marks().empty()) {
    Json marks = Json::array();
    for (const StageMark& m : net.marks()) {
      Json jm;
      jm["label"] = m.label;
      jm["begin"] = m.begin;
      jm["end"] = m.end;
      marks.push_back(std::move(jm));
    }
    j["marks"] = std::move(marks);
  }
  return j;
}

Network network_from_json(const Json& j) {
  Network net(j.at("dim").get<std::size_t>(),
              j.value("label", std::string{}));
  net.set_identity_plus(j.value("identity_plus", false));
  for (const Json& e : j.at("stages")) net.push(element_from_json(e));
  if (j.contains("marks")) {
    for (const Json& m : j.at("marks")) {
      net.add_mark({m.at("label").get<std::string>(),
                    m.at("begin").get<std::size_t>(),
                    m.at("end").get<std::size_t>()});
    }
  }
  return net;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << emit_report(j, /*pretty=*/true) << '\n';
}

namespace {

void emit_value(const Json& j, std::string& out, bool pretty, int indent) {
  const std::string pad(pretty ? 2 * (indent + 1) : 0, ' ');
  const std::string close_pad(pretty ? 2 * indent : 0, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        if (pretty) out += '\n' + pad;
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        emit_value(value, out, pretty, indent + 1);
      }
      if (pretty) out += '\n' + close_pad;
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const Json& value : j) {
        if (!first) out += ',';
        first = false;
        if (pretty) out += '\n' + pad;
        emit_value(value, out, pretty, indent + 1);
      }
      if (pretty) out += '\n' + close_pad;
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        throw InvalidInput("emit_report: non-finite number");
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string emit_report(const Json& j, bool pretty) {
  std::string out;
  emit_value(j, out, pretty, 0);
  return out;
}

}  // namespace qnet
