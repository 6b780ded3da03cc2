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

// Deliberately naive reference implementations. They share no code with the
// library beyond the Graph container, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qperturb/graph.hpp"
#include "qperturb/poly.hpp"

namespace qperturb::testing {

using BigMatrix = std::vector<std::vector<BigInt>>;

inline BigMatrix DenseAdjacency(const Graph& g) {
  BigMatrix a(g.n(), std::vector<BigInt>(g.n(), 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Faddeev-LeVerrier: M_0 = 0, M_k = A M_{k-1} + c_{n-k+1} I,
// c_{n-k} = -tr(A M_k) / k. The division by k is exact for integer matrices.
inline IntPoly FaddeevLeVerrier(const Graph& g) {
  const int n = g.n();
  const BigMatrix a = DenseAdjacency(g);
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (int k = 1; k <= n; ++k) {
    BigMatrix next(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[n - k] = -trace / k;
  }
  return IntPoly(c);
}

// Counts edge-preserving bijections by backtracking in BFS order with only
// degree and adjacency-consistency pruning.
inline std::uint64_t CountAutomorphisms(const Graph& g) {
  const int n = g.n();
  if (n == 0) return 1;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      for (int w = 0; w < n; ++w) {
        if (adj[order[i]][w] && !seen[w]) seen[w] = 1, order.push_back(w);
      }
    }
  }
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      ++count;
      return;
    }
    const int v = order[depth];
    for (int t = 0; t < n; ++t) {
      if (used[t] || g.degree(t) != g.degree(v)) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int u = order[i];
        ok = adj[v][u] == adj[t][image[u]];
      }
      if (!ok) continue;
      image[v] = t;
      used[t] = 1;
      self(self, depth + 1);
      used[t] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

struct NaiveCut {
  int value = 0;
  std::uint64_t optimal_assignments = 0;  // over all 2^n, both orientations
};

inline NaiveCut NaiveMaxCut(const Graph& g) {
  NaiveCut best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    int cut = 0;
    for (const Edge& e : g.edges()) {
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) ++cut;
    }
    if (cut > best.value) {
      best.value = cut;
      best.optimal_assignments = 1;
    } else if (cut == best.value) {
      ++best.optimal_assignments;
    }
  }
  return best;
}

inline Graph RandomGraph(int n, double q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (u(rng) < q) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

}  // namespace qperturb::testing
