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

#include "qperturb/maxcut.hpp"

#include <bit>
#include <thread>

#include "qperturb/error.hpp"

namespace qperturb {
namespace {

struct SweepResult {
  int value = -1;
  std::uint64_t first = 0;
  std::uint64_t count = 0;
};

// Nodes are pre-reversed so that the loop counter k, used directly as a side
// mask, enumerates witnesses in lexicographic order of (z_0, ..., z_{n-1}).
SweepResult Sweep(const std::vector<std::uint64_t>& masks, std::uint64_t begin,
                  std::uint64_t end) {
  SweepResult r;
  const int n = static_cast<int>(masks.size());
  for (std::uint64_t k = begin; k < end; ++k) {
    int cut = 0;
    for (int u = 0; u < n; ++u) {
      if ((k >> u) & 1U) cut += std::popcount(masks[u] & ~k);
    }
    if (cut > r.value) {
      r.value = cut;
      r.first = k;
      r.count = 1;
    } else if (cut == r.value) {
      ++r.count;
    }
  }
  return r;
}

}  // namespace

int CutValue(const Graph& g, std::span<const std::uint8_t> z, CutSemantics semantics) {
  if (z.size() != static_cast<std::size_t>(g.n())) {
    throw Error(ErrorKind::kLengthMismatch, "assignment length " + std::to_string(z.size()) +
                                                " differs from node count " + std::to_string(g.n()));
  }
  int value = 0;
  for (const Edge& e : g.edges()) {
    const int a = z[e.u] ? 1 : 0;
    const int b = z[e.v] ? 1 : 0;
    value += semantics == CutSemantics::kCut ? (a != b) : (1 - a * b);
  }
  return value;
}

CutSolution BruteForceMaxCut(const Graph& g, int threads) {
  const int n = g.n();
  if (n > kMaxBruteForceNodes) {
    throw Error(ErrorKind::kTooLarge, "exhaustive MaxCut is capped at " +
                                          std::to_string(kMaxBruteForceNodes) + " nodes");
  }
  if (n == 0) return {0, {}, 1};

  std::vector<Node> reverse(n);
  for (Node v = 0; v < n; ++v) reverse[v] = n - 1 - v;
  const auto masks = g.Relabeled(reverse).AdjacencyMasks();

  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads > 0 ? threads : 1, total / 4096 + 1));
  std::vector<SweepResult> parts(workers);
  if (workers == 1) {
    parts[0] = Sweep(masks, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        parts[w] = Sweep(masks, total * w / workers, total * (w + 1) / workers);
      });
    }
    for (auto& t : pool) t.join();
  }
  SweepResult best;
  for (const SweepResult& p : parts) {
    if (p.value > best.value) {
      best = p;
    } else if (p.value == best.value) {
      best.count += p.count;  // chunks are ordered, so `first` stays the earliest
    }
  }
  CutSolution sol;
  sol.value = best.value;
  sol.degenerate_count = best.count;
  sol.witness.resize(n);
  for (Node i = 0; i < n; ++i) sol.witness[i] = static_cast<std::uint8_t>((best.first >> (n - 1 - i)) & 1U);
  return sol;
}

ShiftReport PerturbationShift(const Graph& g, const Perturbation& p) {
  const Graph perturbed = ApplyPerturbation(g, p);
  ShiftReport r;
  r.perturbation = perturbed.meta().perturbation.value_or(p.ToString());
  r.base = BruteForceMaxCut(g).value;
  r.perturbed = BruteForceMaxCut(perturbed).value;
  r.shift = r.perturbed - r.base;
  switch (p.kind) {
    case PerturbationKind::kShadow: r.consistent = r.shift == 0; break;
    case PerturbationKind::kPendantEdge: r.consistent = r.shift == 1; break;
    case PerturbationKind::kDeleteEdge: r.consistent = r.shift == 0 || r.shift == -1; break;
  }
  return r;
}

}  // namespace qperturb
