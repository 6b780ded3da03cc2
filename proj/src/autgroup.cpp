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

#include "qperturb/autgroup.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>

#include "qperturb/error.hpp"
#include "qperturb/spectral.hpp"

namespace qperturb {
namespace {

using Cell = std::vector<Node>;
using Partition = std::vector<Cell>;

struct BitGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  explicit BitGraph(const Graph& g) : n(g.n()), adj(g.AdjacencyMasks()) {}
};

// Splits cells by neighbor counts into splitter cells until the partition is
// equitable. Only counts and cell order drive the splits, never labels, so an
// isomorphism carries the refinement of one side onto the other.
void Refine(const BitGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      std::uint64_t splitter = 0;
      for (Node v : p[s]) splitter |= std::uint64_t{1} << v;
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c].size() < 2) continue;
        std::map<int, Cell> groups;
        for (Node v : p[c]) groups[std::popcount(g.adj[v] & splitter)].push_back(v);
        if (groups.size() < 2) continue;
        Partition replacement;
        for (auto& [count, cell] : groups) replacement.push_back(std::move(cell));
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), replacement.begin(), replacement.end());
        changed = true;
        break;
      }
    }
  }
}

using ColorKey = std::pair<int, std::vector<int>>;

std::vector<ColorKey> ColorKeys(const Graph& g) {
  std::vector<ColorKey> keys(g.n());
  for (Node v = 0; v < g.n(); ++v) {
    keys[v].first = g.degree(v);
    for (Node w : g.neighbors(v)) keys[v].second.push_back(g.degree(w));
    std::sort(keys[v].second.begin(), keys[v].second.end());
  }
  return keys;
}

// Cells ordered by color key; the key list comes back alongside so two
// graphs can be compared color by color.
Partition InitialPartition(const Graph& g, std::vector<ColorKey>* cell_keys) {
  const auto keys = ColorKeys(g);
  std::map<ColorKey, Cell> byKey;
  for (Node v = 0; v < g.n(); ++v) byKey[keys[v]].push_back(v);
  Partition p;
  for (auto& [k, cell] : byKey) {
    p.push_back(std::move(cell));
    if (cell_keys) cell_keys->push_back(k);
  }
  return p;
}

bool SameShape(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
  }
  return true;
}

std::size_t FirstNonSingleton(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].size() > 1) return i;
  }
  return p.size();
}

Partition Individualize(const BitGraph& g, Partition p, std::size_t cell, Node v) {
  Cell rest;
  for (Node w : p[cell]) {
    if (w != v) rest.push_back(w);
  }
  p[cell] = {v};
  p.insert(p.begin() + static_cast<std::ptrdiff_t>(cell) + 1, std::move(rest));
  Refine(g, p);
  return p;
}

bool MapsEdges(const BitGraph& a, const BitGraph& b, const Permutation& perm) {
  for (Node u = 0; u < a.n; ++u) {
    std::uint64_t image = 0;
    for (std::uint64_t m = a.adj[u]; m; m &= m - 1) {
      image |= std::uint64_t{1} << perm[std::countr_zero(m)];
    }
    if (image != b.adj[perm[u]]) return false;
  }
  return true;
}

// Backtracking over cell-to-cell correspondences between two refined
// partitions. Left choices are fixed (first vertex of the first open cell);
// every right vertex of the matching cell is tried.
std::optional<Permutation> Extend(const BitGraph& a, const BitGraph& b, const Partition& left,
                                  const Partition& right) {
  if (!SameShape(left, right)) return std::nullopt;
  const std::size_t c = FirstNonSingleton(left);
  if (c == left.size()) {
    Permutation perm(a.n);
    for (std::size_t i = 0; i < left.size(); ++i) perm[left[i][0]] = right[i][0];
    if (MapsEdges(a, b, perm)) return perm;
    return std::nullopt;
  }
  const Node v = left[c][0];
  const Partition next_left = Individualize(a, left, c, v);
  for (Node w : right[c]) {
    auto found = Extend(a, b, next_left, Individualize(b, right, c, w));
    if (found) return found;
  }
  return std::nullopt;
}

std::vector<char> Orbit(Node start, const std::vector<Permutation>& gens, int n) {
  std::vector<char> seen(n, 0);
  std::vector<Node> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const Node x = stack.back();
    stack.pop_back();
    for (const Permutation& g : gens) {
      if (!seen[g[x]]) {
        seen[g[x]] = 1;
        stack.push_back(g[x]);
      }
    }
  }
  return seen;
}

void RequireSearchable(const Graph& g) {
  if (g.n() > kMaxAutNodes) {
    throw Error(ErrorKind::kTooLarge, "automorphism search is capped at " +
                                          std::to_string(kMaxAutNodes) + " nodes");
  }
}

BigInt ProductTreeOrders(int from, int to) {
  BigInt p = 1;
  for (int i = from; i <= to; ++i) p *= PredictTreeOrder(i);
  return p;
}

void RequireLevel(int h, int r) {
  if (h < 1 || r < 1 || r > h) {
    throw Error(ErrorKind::kLevelOutOfRange,
                "level " + std::to_string(r) + " outside 1.." + std::to_string(h));
  }
}

int DepthInLevelOrder(Node v) { return std::bit_width(static_cast<unsigned>(v) + 1) - 1; }

}  // namespace

AutReport AutOrder(const Graph& g) {
  RequireSearchable(g);
  AutReport report;
  const int n = g.n();
  if (n == 0) return report;
  const BitGraph bg(g);

  Partition p = InitialPartition(g, nullptr);
  Refine(bg, p);
  struct Level {
    Partition partition;
    std::size_t cell;
    Node point;
  };
  std::vector<Level> chain;
  for (std::size_t c = FirstNonSingleton(p); c < p.size(); c = FirstNonSingleton(p)) {
    chain.push_back({p, c, p[c][0]});
    p = Individualize(bg, p, c, p[c][0]);
  }

  report.base.resize(chain.size());
  report.orbit_sizes.resize(chain.size());
  for (std::size_t i = chain.size(); i-- > 0;) {
    const Level& lv = chain[i];
    const Partition fixed = Individualize(bg, lv.partition, lv.cell, lv.point);
    auto orbit = Orbit(lv.point, report.generators, n);
    for (Node w : lv.partition[lv.cell]) {
      if (orbit[w]) continue;
      auto sigma = Extend(bg, bg, fixed, Individualize(bg, lv.partition, lv.cell, w));
      if (sigma) {
        report.generators.push_back(std::move(*sigma));
        orbit = Orbit(lv.point, report.generators, n);
      }
    }
    const int size = static_cast<int>(std::count(orbit.begin(), orbit.end(), 1));
    report.base[i] = lv.point;
    report.orbit_sizes[i] = size;
    report.order *= size;
  }
  return report;
}

bool IsAutomorphism(const Graph& g, std::span<const Node> perm) {
  if (perm.size() != static_cast<std::size_t>(g.n())) return false;
  std::vector<char> hit(g.n(), 0);
  for (Node v : perm) {
    if (!g.HasNode(v) || hit[v]) return false;
    hit[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!g.HasEdge(perm[e.u], perm[e.v])) return false;
  }
  return true;
}

bool PermutationMatrixPreservesAdjacency(const Graph& g, std::span<const Node> perm) {
  const int n = g.n();
  if (perm.size() != static_cast<std::size_t>(n)) return false;
  if (n == 0) return true;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (!g.HasNode(perm[i])) return false;
    d(perm[i], i) = 1.0;
  }
  const Eigen::MatrixXd a = AdjacencyMatrix(g);
  return (d.transpose() * a * d - a).cwiseAbs().maxCoeff() == 0.0;
}

std::optional<Permutation> FindIsomorphism(const Graph& a, const Graph& b) {
  RequireSearchable(a);
  RequireSearchable(b);
  if (a.n() != b.n() || a.num_edges() != b.num_edges()) return std::nullopt;
  if (a.n() == 0) return Permutation{};
  std::vector<ColorKey> keys_a, keys_b;
  Partition pa = InitialPartition(a, &keys_a);
  Partition pb = InitialPartition(b, &keys_b);
  if (keys_a != keys_b || !SameShape(pa, pb)) return std::nullopt;
  const BitGraph ba(a), bb(b);
  Refine(ba, pa);
  Refine(bb, pb);
  return Extend(ba, bb, pa, pb);
}

BigInt Factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ShadowPrediction PredictShadowOrder(const BigInt& base_order, int s, bool base_has_isolated_nodes) {
  if (s < 1) throw Error(ErrorKind::kInvalidArgument, "shadow count must be >= 1");
  return {Factorial(s) * base_order, !base_has_isolated_nodes};
}

BigInt PredictTreeOrder(int h) {
  if (h < 0) throw Error(ErrorKind::kLevelOutOfRange, "height must be >= 0");
  BigInt order = 1;
  for (int i = 1; i <= h; ++i) order = 2 * order * order;
  return order;
}

BigInt PredictTreeDeletedEdgeOrder(int h, int r) {
  RequireLevel(h, r);
  // For r = 1 and h <= 2 the old root turns into one more leaf of a star
  // (K_2, K_{1,3}), a symmetry the general count does not see.
  if (r == 1 && h == 1) return 2;
  if (r == 1 && h == 2) return 12;
  const BigInt cut = PredictTreeOrder(h - r);
  return cut * cut * ProductTreeOrders(h - r + 1, h - 1);
}

BigInt PredictTreePendantOrder(int h, int r) {
  RequireLevel(h, r);
  if (h == 1) return 2;  // the path P_4
  if (r == h) return ProductTreeOrders(1, h - 1);
  if (r == h - 1) return 6 * ProductTreeOrders(1, h - 1);
  const BigInt below = PredictTreeOrder(h - r);
  return below * below * ProductTreeOrders(h - r + 1, h - 1);
}

BigInt PredictKnDeletedEdgeOrder(int n) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "K_n minus an edge needs n >= 2");
  return 2 * Factorial(n - 2);
}

BigInt PredictKnPendantOrder(int n) {
  if (n < 3) throw Error(ErrorKind::kInvalidArgument, "K_n plus a pendant edge rule needs n >= 3");
  return Factorial(n - 1);
}

Node RightmostAtDepth(int r) { return (Node{1} << (r + 1)) - 2; }

RulePrediction PredictForGraph(const Graph& g, const std::string& rule) {
  RulePrediction out;
  out.rule = rule;
  const GraphMeta& m = g.meta();
  const std::string pert = m.perturbation.value_or("");
  auto fail = [&](std::string why) {
    out.applicable = false;
    out.reason = std::move(why);
    return out;
  };
  auto param = [&](const char* key) -> std::optional<int> {
    if (m.params.contains(key) && m.params[key].is_number_integer()) return m.params[key].get<int>();
    return std::nullopt;
  };
  auto single = [&](const char* prefix) { return pert.rfind(prefix, 0) == 0 && pert.find('+') == std::string::npos; };
  auto number_after = [&](std::size_t pos, std::size_t end) {
    int value = -1;
    std::from_chars(pert.data() + pos, pert.data() + end, value);
    return value;
  };

  if (rule == "prop7") {
    if (!single("shadow:")) return fail("graph is not a single shadow perturbation");
    const int s = number_after(7, pert.size());
    if (s < 1 || s > g.n()) return fail("malformed shadow count");
    std::vector<Node> added;
    for (Node v = g.n() - s; v < g.n(); ++v) added.push_back(v);
    const Graph base = g.WithoutNodes(added);
    const auto p = PredictShadowOrder(AutOrder(base).order, s, base.HasIsolatedNode());
    if (!p.applicable) return fail("base graph already has isolated nodes");
    out.applicable = true;
    out.predicted = p.order;
    return out;
  }
  if (rule == "prop8") {
    if (m.family != "binary_tree" || !pert.empty() || !param("h")) return fail("graph is not an unperturbed binary tree");
    if (*param("h") < 1) return fail("height must be >= 1");
    out.applicable = true;
    out.predicted = PredictTreeOrder(*param("h"));
    return out;
  }
  if (rule == "prop9" || rule == "prop10") {
    const bool del = rule == "prop9";
    if (m.family != "binary_tree" || !param("h")) return fail("graph is not a perturbed binary tree");
    if (!single(del ? "delete:" : "pendant:")) return fail("graph does not carry the matching perturbation");
    const int h = *param("h");
    int r = -1;
    if (del) {
      const auto dash = pert.find('-');
      r = DepthInLevelOrder(number_after(dash + 1, pert.size()));
    } else {
      r = DepthInLevelOrder(number_after(8, pert.size()));
    }
    if (r < 1 || r > h) return fail("perturbation level outside 1..h");
    out.applicable = true;
    out.predicted = del ? PredictTreeDeletedEdgeOrder(h, r) : PredictTreePendantOrder(h, r);
    return out;
  }
  if (rule == "prop11" || rule == "prop12") {
    const bool del = rule == "prop11";
    if (m.family != "complete" || !param("n")) return fail("graph is not a perturbed complete graph");
    if (!single(del ? "delete:" : "pendant:")) return fail("graph does not carry the matching perturbation");
    const int n = *param("n");
    if (!del && n < 3) return fail("pendant rule needs n >= 3");
    if (del && n < 2) return fail("deletion rule needs n >= 2");
    out.applicable = true;
    out.predicted = del ? PredictKnDeletedEdgeOrder(n) : PredictKnPendantOrder(n);
    return out;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown prediction rule '" + rule + "'");
}

CospectralReport CospectralNonisomorphicCheck(const Graph& a, const Graph& b) {
  if (a.n() == 0 || b.n() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "cospectrality check needs nonempty graphs");
  }
  CospectralReport r;
  r.same_charpoly = CharPolyOf(a) == CharPolyOf(b);
  r.isomorphic = FindIsomorphism(a, b).has_value();
  return r;
}

}  // namespace qperturb
