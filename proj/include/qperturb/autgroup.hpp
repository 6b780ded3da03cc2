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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qperturb/graph.hpp"
#include "qperturb/poly.hpp"

namespace qperturb {

using Permutation = std::vector<Node>;  // perm[v] is the image of v

struct AutReport {
  BigInt order = 1;
  std::vector<Permutation> generators;
  std::string method = "enumerated";  // enumerated | predicted
  std::optional<std::string> prediction_rule;
  // Stabilizer chain the order was read from: base points and the orbit
  // length of each under the pointwise stabilizer of the earlier points.
  std::vector<Node> base;
  std::vector<int> orbit_sizes;
};

// Search is limited to graphs that fit a 64-bit adjacency row.
inline constexpr int kMaxAutNodes = 64;

// |Aut(g)| and a generating set.
//
// Nodes start colored by (degree, sorted neighbor degrees) and the coloring
// is refined to an equitable partition. Individualizing the first vertex of
// the first non-singleton cell, level after level, gives a base b_1..b_k;
// the orbit of b_i under the stabilizer of b_1..b_{i-1} is found by a
// color-preserving backtracking search per candidate image, skipping images
// already reachable through generators in hand. The order is the product of
// orbit lengths. Throws TooLarge above kMaxAutNodes.
AutReport AutOrder(const Graph& g);

// (u,v) in E  <=>  (perm[u], perm[v]) in E.
bool IsAutomorphism(const Graph& g, std::span<const Node> perm);

// The same test in matrix form, A == D^T A D with D the permutation matrix.
bool PermutationMatrixPreservesAdjacency(const Graph& g, std::span<const Node> perm);

// An edge-preserving bijection a -> b, if one exists.
std::optional<Permutation> FindIsomorphism(const Graph& a, const Graph& b);

// Closed forms for the symmetry counts of perturbed families.

struct ShadowPrediction {
  BigInt order = 0;
  // False when the base already has isolated nodes: new shadow nodes then
  // join them in one larger symmetric factor and s! * |Aut| undercounts.
  bool applicable = true;
};

// s! * base_order.
ShadowPrediction PredictShadowOrder(const BigInt& base_order, int s, bool base_has_isolated_nodes);

// Full binary tree of height h: |G_{h+1}| = 2 |G_h|^2, i.e. 2^(2^h - 1).
// h = 0 gives 1.
BigInt PredictTreeOrder(int h);

// Levels count depth from the root (root at 0, leaves at h).

// Height-h full binary tree with the edge above one depth-r node removed.
// The cut-off subtree and its former sibling are copies of T_{h-r}; every
// higher ancestor keeps one intact side subtree and loses its swap:
//   |Aut T_{h-r}|^2 * prod_{i=h-r+1}^{h-1} |Aut T_i|.
// Exceptions: (h, r) = (1, 1) gives 2 and (2, 1) gives 12, where the old
// root becomes a leaf of a star.
// Throws LevelOutOfRange unless 1 <= r <= h.
BigInt PredictTreeDeletedEdgeOrder(int h, int r);

// Height-h full binary tree with a pendant edge hung on one depth-r node:
//   r = h:      prod_{i=1}^{h-1} |Aut T_i|
//   r = h - 1:  3! * prod_{i=1}^{h-1} |Aut T_i|
//   r < h - 1:  |Aut T_{h-r}|^2 * prod_{i=h-r+1}^{h-1} |Aut T_i|
// except h = 1, where the result is the path P_4 of order 2.
// Throws LevelOutOfRange unless 1 <= r <= h.
BigInt PredictTreePendantOrder(int h, int r);

// K_n minus one edge: 2 * (n-2)!. Requires n >= 2.
BigInt PredictKnDeletedEdgeOrder(int n);

// K_n plus a pendant edge: (n-1)!. Requires n >= 3 (K_2 plus a pendant edge
// is P_3, whose order is 2).
BigInt PredictKnPendantOrder(int n);

BigInt Factorial(int n);

// Node index of the rightmost depth-r node of a level-order binary tree.
Node RightmostAtDepth(int r);

// Rule-based prediction for a graph, with parameters read from its
// metadata (family, params, perturbation). Rules: prop7 (shadow), prop8
// (binary tree), prop9 (binary tree minus edge), prop10 (binary tree plus
// pendant), prop11 (K_n minus edge), prop12 (K_n plus pendant).
struct RulePrediction {
  std::string rule;
  bool applicable = false;
  BigInt predicted = 0;
  std::string reason;  // set when not applicable
};

RulePrediction PredictForGraph(const Graph& g, const std::string& rule);

struct CospectralReport {
  bool same_charpoly = false;
  bool isomorphic = false;
};

// Exact polynomial comparison plus an isomorphism search.
CospectralReport CospectralNonisomorphicCheck(const Graph& a, const Graph& b);

}  // namespace qperturb
