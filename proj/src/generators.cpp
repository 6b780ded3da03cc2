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

#include "qperturb/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qperturb/error.hpp"
#include "qperturb/rng.hpp"

namespace qperturb {
namespace {

GraphMeta Meta(std::string family, nlohmann::ordered_json params,
               std::optional<std::uint64_t> seed = std::nullopt) {
  GraphMeta m;
  m.family = std::move(family);
  m.params = std::move(params);
  m.seed = seed;
  return m;
}

void RequireNonNegative(int n, const char* what) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, std::string(what) + " must be >= 0");
}

}  // namespace

Graph GenComplete(int n) {
  RequireNonNegative(n, "n");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges), Meta("complete", {{"n", n}}));
}

Graph GenErdosRenyi(int n, double q, std::uint64_t seed) {
  RequireNonNegative(n, "n");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      if (rng.UniformDouble() < q) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges), Meta("erdos_renyi", {{"n", n}, {"q", q}}, seed));
}

Graph GenFullBinaryTree(int h) {
  RequireNonNegative(h, "height");
  if (h > 20) throw Error(ErrorKind::kTooLarge, "tree height above 20");
  const int n = (1 << (h + 1)) - 1;
  std::vector<Edge> edges;
  for (Node i = 1; i < n; ++i) edges.push_back({(i - 1) / 2, i});
  return Graph(n, std::move(edges), Meta("binary_tree", {{"h", h}}));
}

Graph GenFullRaryTree(int r, int n) {
  if (r < 2) throw Error(ErrorKind::kInvalidArgument, "arity must be >= 2");
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "tree needs at least one node");
  std::vector<Edge> edges;
  for (Node i = 1; i < n; ++i) edges.push_back({(i - 1) / r, i});
  return Graph(n, std::move(edges), Meta("rary_tree", {{"r", r}, {"n", n}}));
}

Graph GenRandomRegular(int d, int n, std::uint64_t seed) {
  if (d < 0 || n < 0 || d >= n || (static_cast<long>(d) * n) % 2 != 0) {
    throw Error(ErrorKind::kInfeasibleDegreeSequence,
                "no simple " + std::to_string(d) + "-regular graph on " +
                    std::to_string(n) + " nodes");
  }
  Rng rng(seed);
  std::vector<Node> points;
  points.reserve(static_cast<std::size_t>(d) * n);
  for (Node v = 0; v < n; ++v) {
    for (int k = 0; k < d; ++k) points.push_back(v);
  }
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < kMaxRegularRestarts; ++attempt) {
    // Fisher-Yates with the portable index draw, then pair consecutive points.
    std::vector<Node> pts = points;
    for (std::size_t i = pts.size(); i > 1; --i) {
      std::swap(pts[i - 1], pts[rng.UniformIndex(i)]);
    }
    edges.clear();
    bool ok = true;
    for (std::size_t i = 0; i < pts.size(); i += 2) {
      Node a = std::min(pts[i], pts[i + 1]);
      Node b = std::max(pts[i], pts[i + 1]);
      if (a == b) {
        ok = false;
        break;
      }
      edges.push_back({a, b});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges), Meta("random_regular", {{"d", d}, {"n", n}}, seed));
  }
  throw Error(ErrorKind::kInfeasibleDegreeSequence,
              "pairing model did not produce a simple graph within " +
                  std::to_string(kMaxRegularRestarts) + " restarts");
}

Graph GenPath(int n) {
  RequireNonNegative(n, "n");
  std::vector<Edge> edges;
  for (Node i = 1; i < n; ++i) edges.push_back({i - 1, i});
  return Graph(n, std::move(edges), Meta("path", {{"n", n}}));
}

Graph GenCycle(int n) {
  if (n < 3) throw Error(ErrorKind::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges), Meta("cycle", {{"n", n}}));
}

Graph GenStar(int leaves) {
  RequireNonNegative(leaves, "leaves");
  std::vector<Edge> edges;
  for (Node i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges), Meta("star", {{"leaves", leaves}}));
}

Graph GenEmpty(int n) {
  RequireNonNegative(n, "n");
  return Graph(n, {}, Meta("empty", {{"n", n}}));
}

}  // namespace qperturb
