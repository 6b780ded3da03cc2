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

#include <cstdint>

#include "qperturb/graph.hpp"

namespace qperturb {

// K_n. K_0 is the null graph, K_1 a single node without edges.
Graph GenComplete(int n);

// G(n, q): each of the n(n-1)/2 pairs, visited in lexicographic order, is
// kept when a uniform draw falls below q. Connectivity is not enforced.
Graph GenErdosRenyi(int n, double q, std::uint64_t seed);

// Rooted full binary tree of height h in level order: 2^(h+1)-1 nodes, root 0.
Graph GenFullBinaryTree(int h);

// Level-order filled r-ary tree on exactly n nodes; node i > 0 hangs off
// node (i-1)/r.
Graph GenFullRaryTree(int r, int n);

// Uniform-ish d-regular simple graph from the pairing (configuration) model.
// A pairing that produces a loop or a repeated edge is discarded whole and
// redrawn, up to kMaxRegularRestarts times.
inline constexpr int kMaxRegularRestarts = 10000;
Graph GenRandomRegular(int d, int n, std::uint64_t seed);

// Small named shapes used by tests and the CLI.
Graph GenPath(int n);   // n nodes in a line
Graph GenCycle(int n);  // n >= 3
Graph GenStar(int leaves);  // K_{1,leaves}, center 0
Graph GenEmpty(int n);  // n isolated nodes

}  // namespace qperturb
