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

#include <string>

#include <json.hpp>

#include "qnet/matrix.hpp"
#include "qnet/network.hpp"
#include "qnet/registers.hpp"

namespace qnet {

using Json = nlohmann::ordered_json;

// Matrix file: {"rows": R, "cols": C, "entries": [[re, im], ...]} row-major.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// State file: {"register_dims": [...], "has_aux": true,
//              "amplitudes": [[re, im], ...]}.
Json state_to_json(const AugmentedState& s);
AugmentedState state_from_json(const Json& j);

// Network IR file: {"dim": D, "label": "...", "identity_plus": B,
//                   "stages": [element encodings...]}.
// Element encodings:
//   {"type":"rotator","m":M,"amp":[re,im]}
//   {"type":"transitor","m":M,"n":N,"amp":[re,im]}
//   {"type":"jointer"} {"type":"connector"} {"type":"proj_d"}
//   {"type":"proj_p"}
//   {"type":"external","matrix":{...},"register_only":B}
Json network_to_json(const Network& net);
Network network_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

/// Stable report serialization: keys in insertion order, numbers with 17
/// significant digits (lossless for doubles). Refuses NaN/Inf.
std::string emit_report(const Json& j, bool pretty = false);

}  // namespace qnet
