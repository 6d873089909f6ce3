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

#include "qnet/algorithms.hpp"
#include "qnet/json_io.hpp"
#include "qnet/schrodinger.hpp"

namespace qnet {

Json shor_report_to_json(const ShorReport& r);
Json grover_report_to_json(const GroverReport& r);
Json comparison_to_json(const ExactComparison& c);

}  // namespace qnet
