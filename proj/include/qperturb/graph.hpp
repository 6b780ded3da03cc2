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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace qperturb {

using Node = int;

// Undirected edge stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Provenance carried alongside a graph through generation, perturbation and
// the JSON interchange format.
struct GraphMeta {
  std::string family = "custom";
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  std::optional<std::string> perturbation;

  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

// Finite simple undirected graph on nodes 0..n-1.
//
// Construction normalizes every edge to u < v and sorts the list; self-loops,
// duplicates and out-of-range endpoints are rejected. Instances are immutable.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges, GraphMeta meta = {});

  int n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const GraphMeta& meta() const { return meta_; }

  std::span<const Node> neighbors(Node v) const { return adjacency_[v]; }
  int degree(Node v) const { return static_cast<int>(adjacency_[v].size()); }
  bool HasEdge(Node u, Node v) const;
  bool HasNode(Node v) const { return v >= 0 && v < n_; }
  bool HasIsolatedNode() const;
  bool IsConnected() const;
  bool IsTree() const;
  // Uniform degree, if any (the empty and null graphs are 0-regular).
  std::optional<int> RegularDegree() const;

  // Bit v of mask u is set iff (u, v) is an edge. Requires n <= 64.
  std::vector<std::uint64_t> AdjacencyMasks() const;

  Graph WithMeta(GraphMeta meta) const;
  Graph Complement() const;
  // Deletes the given nodes and their incident edges; survivors are
  // relabeled in increasing order.
  Graph WithoutNodes(std::span<const Node> removed) const;
  // Node v of this graph becomes node perm[v] of the result.
  Graph Relabeled(std::span<const Node> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;
  GraphMeta meta_;
};

}  // namespace qperturb
