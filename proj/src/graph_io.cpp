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

#include "qperturb/graph_io.hpp"

#include <fstream>
#include <iostream>

#include "qperturb/error.hpp"

namespace qperturb {

nlohmann::ordered_json GraphToJson(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  nlohmann::ordered_json meta;
  meta["family"] = g.meta().family;
  meta["params"] = g.meta().params;
  meta["seed"] = g.meta().seed ? nlohmann::ordered_json(*g.meta().seed) : nullptr;
  meta["perturbation"] =
      g.meta().perturbation ? nlohmann::ordered_json(*g.meta().perturbation) : nullptr;
  j["meta"] = std::move(meta);
  return j;
}

Graph GraphFromJson(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw Error(ErrorKind::kParseError, "graph JSON needs \"n\" and \"edges\"");
    }
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::kParseError, "each edge must be a [u, v] pair");
      }
      edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    GraphMeta meta;
    if (j.contains("meta") && j.at("meta").is_object()) {
      const auto& m = j.at("meta");
      if (m.contains("family") && m["family"].is_string()) meta.family = m["family"];
      if (m.contains("params") && m["params"].is_object()) {
        meta.params = nlohmann::ordered_json::parse(m["params"].dump());
      }
      if (m.contains("seed") && m["seed"].is_number_integer()) {
        meta.seed = m["seed"].get<std::uint64_t>();
      }
      if (m.contains("perturbation") && m["perturbation"].is_string()) {
        meta.perturbation = m["perturbation"].get<std::string>();
      }
    }
    return Graph(n, std::move(edges), std::move(meta));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("graph JSON: ") + e.what());
  }
}

std::string GraphToString(const Graph& g) { return GraphToJson(g).dump() + "\n"; }

Graph ReadGraph(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("graph JSON: ") + e.what());
  }
  return GraphFromJson(j);
}

Graph ReadGraphFile(const std::string& path) {
  if (path == "-") return ReadGraph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open " + path);
  return ReadGraph(in);
}

void WriteGraphFile(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path);
  out << GraphToString(g);
  if (!out) throw Error(ErrorKind::kIoError, "write failed for " + path);
}

}  // namespace qperturb
