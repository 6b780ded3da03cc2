// Copyright 2026 The qperturb Authors.
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

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "qperturb/graph.hpp"

namespace qperturb {

// Interchange format:
//   {"n": 4, "edges": [[0,1],...],
//    "meta": {"family": "...", "params": {...}, "seed": 7, "perturbation": null}}
nlohmann::ordered_json GraphToJson(const Graph& g);
Graph GraphFromJson(const nlohmann::json& j);

std::string GraphToString(const Graph& g);  // compact, newline-terminated
Graph ReadGraph(std::istream& in);
// "-" reads standard input.
Graph ReadGraphFile(const std::string& path);
void WriteGraphFile(const Graph& g, const std::string& path);

}  // namespace qperturb
