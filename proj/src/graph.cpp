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

#include "qperturb/graph.hpp"

#include <algorithm>
#include <numeric>

#include "qperturb/error.hpp"

namespace qperturb {

Graph::Graph(int n, std::vector<Edge> edges, GraphMeta meta)
    : n_(n), edges_(std::move(edges)), meta_(std::move(meta)) {
  if (n_ < 0) throw Error(ErrorKind::kInvalidArgument, "node count must be >= 0");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw Error(ErrorKind::kNodeOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kInvalidArgument,
                  "self-loop at node " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorKind::kInvalidArgument, "duplicate edge");
  }
  adjacency_.assign(n_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::HasEdge(Node u, Node v) const {
  if (!HasNode(u) || !HasNode(v) || u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Graph::HasIsolatedNode() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& row) { return row.empty(); });
}

bool Graph::IsConnected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Node u = stack.back();
    stack.pop_back();
    for (Node w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

bool Graph::IsTree() const {
  return n_ >= 1 && num_edges() == static_cast<std::size_t>(n_ - 1) && IsConnected();
}

std::optional<int> Graph::RegularDegree() const {
  if (n_ == 0) return 0;
  const int d = degree(0);
  for (Node v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<std::uint64_t> Graph::AdjacencyMasks() const {
  if (n_ > 64) {
    throw Error(ErrorKind::kTooLarge, "bitmask adjacency needs n <= 64");
  }
  std::vector<std::uint64_t> masks(n_, 0);
  for (const Edge& e : edges_) {
    masks[e.u] |= std::uint64_t{1} << e.v;
    masks[e.v] |= std::uint64_t{1} << e.u;
  }
  return masks;
}

Graph Graph::WithMeta(GraphMeta meta) const {
  Graph g = *this;
  g.meta_ = std::move(meta);
  return g;
}

Graph Graph::Complement() const {
  std::vector<Edge> out;
  for (Node u = 0; u < n_; ++u) {
    for (Node v = u + 1; v < n_; ++v) {
      if (!HasEdge(u, v)) out.push_back({u, v});
    }
  }
  GraphMeta m = meta_;
  m.family = "complement";
  return Graph(n_, std::move(out), std::move(m));
}

Graph Graph::WithoutNodes(std::span<const Node> removed) const {
  std::vector<Node> label(n_, 0);
  for (Node r : removed) {
    if (!HasNode(r)) {
      throw Error(ErrorKind::kNodeOutOfRange, "node " + std::to_string(r) + " not in graph");
    }
    label[r] = -1;
  }
  int next = 0;
  for (Node v = 0; v < n_; ++v) {
    if (label[v] != -1) label[v] = next++;
  }
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (label[e.u] >= 0 && label[e.v] >= 0) out.push_back({label[e.u], label[e.v]});
  }
  return Graph(next, std::move(out), meta_);
}

Graph Graph::Relabeled(std::span<const Node> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorKind::kLengthMismatch, "permutation length differs from node count");
  }
  std::vector<char> hit(n_, 0);
  for (Node p : perm) {
    if (!HasNode(p) || hit[p]) {
      throw Error(ErrorKind::kInvalidArgument, "relabeling is not a permutation");
    }
    hit[p] = 1;
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({perm[e.u], perm[e.v]});
  return Graph(n_, std::move(out), meta_);
}

}  // namespace qperturb
