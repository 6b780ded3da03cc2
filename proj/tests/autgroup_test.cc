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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qperturb/autgroup.hpp"
#include "qperturb/dataset.hpp"
#include "qperturb/generators.hpp"
#include "qperturb/perturbation.hpp"
#include "qperturb/spectral.hpp"
#include "test_support.hpp"

namespace qperturb {
namespace {

using testing::CountAutomorphisms;
using testing::KindOf;
using testing::RandomGraph;

BigInt Oracle(const Graph& g) { return BigInt(CountAutomorphisms(g)); }

Permutation RandomPermutation(int n, std::uint64_t seed) {
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

void ExpectGeneratorsValid(const Graph& g, const AutReport& r) {
  for (const Permutation& perm : r.generators) {
    EXPECT_TRUE(IsAutomorphism(g, perm));
    EXPECT_TRUE(PermutationMatrixPreservesAdjacency(g, perm));
  }
}

// Size of the group generated by r.generators, by closing the orbit of the
// identity under right multiplication. Only used on small groups.
std::size_t GeneratedGroupSize(int n, const std::vector<Permutation>& gens) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& a : frontier) {
      for (const Permutation& g : gens) {
        Permutation c(n);
        for (int v = 0; v < n; ++v) c[v] = g[a[v]];
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

TEST(AutOrder, SmallNamedGraphs) {
  EXPECT_EQ(AutOrder(Graph()).order, 1);
  EXPECT_EQ(AutOrder(GenEmpty(1)).order, 1);
  EXPECT_EQ(AutOrder(GenEmpty(5)).order, 120);
  EXPECT_EQ(AutOrder(GenPath(2)).order, 2);
  EXPECT_EQ(AutOrder(GenPath(5)).order, 2);
  EXPECT_EQ(AutOrder(GenCycle(6)).order, 12);
  EXPECT_EQ(AutOrder(GenStar(4)).order, 24);
  // Asymmetric tree on 7 nodes: a spider with legs 1, 2, 3.
  const Graph spider(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
  EXPECT_EQ(AutOrder(spider).order, 1);
  EXPECT_TRUE(AutOrder(spider).generators.empty());
}

TEST(AutOrder, CompleteGraphs) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(AutOrder(GenComplete(n)).order, Factorial(n)) << n;
}

TEST(AutOrder, MatchesBacktrackingOracleOnRandomGraphs) {
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 8;
    const double q = 0.15 + 0.1 * (trial % 7);
    const Graph g = RandomGraph(n, q, 1000 + trial);
    const AutReport r = AutOrder(g);
    EXPECT_EQ(r.order, Oracle(g)) << "trial " << trial;
    ExpectGeneratorsValid(g, r);
  }
}

TEST(AutOrder, MatchesOracleOnDatasetAndVariants) {
  for (const auto& dg : DefaultDataset()) {
    EXPECT_EQ(AutOrder(dg.graph).order, Oracle(dg.graph)) << dg.id;
    for (const char* v : {"shadow:1", "shadow:2", "pendant", "delete"}) {
      const Graph pg = ApplyPerturbation(dg.graph, Perturbation::Parse(v, 77));
      EXPECT_EQ(AutOrder(pg).order, Oracle(pg)) << dg.id << " " << v;
    }
  }
}

TEST(AutOrder, GeneratorsGenerateTheWholeGroup) {
  const std::vector<Graph> graphs{GenComplete(5), GenCycle(7), GenStar(4), GenFullBinaryTree(2),
                                  GenPath(6), RandomGraph(7, 0.4, 5)};
  for (const Graph& g : graphs) {
    const AutReport r = AutOrder(g);
    ExpectGeneratorsValid(g, r);
    EXPECT_EQ(BigInt(GeneratedGroupSize(g.n(), r.generators)), r.order);
  }
}

TEST(AutOrder, OrbitProductEqualsOrder) {
  for (const auto& dg : DefaultDataset()) {
    const AutReport r = AutOrder(dg.graph);
    BigInt prod = 1;
    for (int s : r.orbit_sizes) prod *= s;
    EXPECT_EQ(prod, r.order) << dg.id;
    EXPECT_EQ(r.base.size(), r.orbit_sizes.size());
  }
}

TEST(AutOrder, InvariantUnderRelabeling) {
  for (const auto& dg : DefaultDataset()) {
    const Permutation perm = RandomPermutation(dg.graph.n(), 31);
    EXPECT_EQ(AutOrder(dg.graph.Relabeled(perm)).order, AutOrder(dg.graph).order) << dg.id;
  }
}

TEST(AutOrder, RejectsOversizedGraphs) {
  EXPECT_EQ(KindOf([] { AutOrder(GenEmpty(kMaxAutNodes + 1)); }), ErrorKind::kTooLarge);
  EXPECT_NO_THROW(AutOrder(GenPath(kMaxAutNodes)));
}

TEST(IsAutomorphism, AcceptsAndRejects) {
  const Graph p4 = GenPath(4);
  EXPECT_TRUE(IsAutomorphism(p4, Permutation{3, 2, 1, 0}));
  EXPECT_TRUE(PermutationMatrixPreservesAdjacency(p4, Permutation{3, 2, 1, 0}));
  EXPECT_FALSE(IsAutomorphism(p4, Permutation{1, 0, 2, 3}));
  EXPECT_FALSE(PermutationMatrixPreservesAdjacency(p4, Permutation{1, 0, 2, 3}));
  EXPECT_FALSE(IsAutomorphism(p4, Permutation{0, 0, 1, 2}));
  EXPECT_FALSE(IsAutomorphism(p4, Permutation{0, 1}));
}

TEST(IsAutomorphism, BothFormsAgreeOnRandomPermutations) {
  const Graph g = GenCycle(6);
  for (int s = 0; s < 50; ++s) {
    const Permutation perm = RandomPermutation(6, s);
    EXPECT_EQ(IsAutomorphism(g, perm), PermutationMatrixPreservesAdjacency(g, perm));
  }
}

TEST(FindIsomorphism, RecoversRelabeling) {
  const Graph g = RandomGraph(9, 0.4, 4);
  const Graph h = g.Relabeled(RandomPermutation(9, 8));
  const auto iso = FindIsomorphism(g, h);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(g.Relabeled(*iso), h);
  EXPECT_FALSE(FindIsomorphism(GenPath(4), GenStar(3)).has_value());
  EXPECT_FALSE(FindIsomorphism(GenPath(4), GenPath(5)).has_value());
}

TEST(Shadow, OrderMultipliesByFactorial) {
  EXPECT_EQ(PredictShadowOrder(24, 2, false).order, 48);
  EXPECT_FALSE(PredictShadowOrder(24, 2, true).applicable);
  for (const auto& dg : DefaultDataset()) {
    const BigInt base = AutOrder(dg.graph).order;
    for (int s : {1, 2, 3}) {
      const Graph pg = ApplyPerturbation(dg.graph, Perturbation::Shadow(s));
      const auto pred = PredictShadowOrder(base, s, dg.graph.HasIsolatedNode());
      if (pred.applicable) EXPECT_EQ(AutOrder(pg).order, pred.order) << dg.id << " s=" << s;
    }
  }
}

TEST(Shadow, IsolatedBaseNodesJoinTheShadowFactor) {
  // P_3 + K_1 has order 2; two more isolated nodes give 2 * 3! = 12, not 2 * 2!.
  const Graph base(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(AutOrder(base).order, 2);
  const Graph pg = ApplyPerturbation(base, Perturbation::Shadow(2));
  EXPECT_EQ(AutOrder(pg).order, 12);
  EXPECT_EQ(Oracle(pg), 12);
  EXPECT_FALSE(PredictForGraph(pg, "prop7").applicable);
}

TEST(Tree, FullBinaryTreeOrders) {
  EXPECT_EQ(PredictTreeOrder(0), 1);
  const BigInt expected[] = {1, 2, 8, 128, 32768};
  for (int h = 0; h <= 4; ++h) {
    EXPECT_EQ(PredictTreeOrder(h), expected[h]);
    EXPECT_EQ(AutOrder(GenFullBinaryTree(h)).order, expected[h]) << h;
  }
  EXPECT_EQ(PredictTreeOrder(6), BigInt(1) << 63);
}

// Every depth-r node, not only the rightmost one, must give the same count,
// since all depth-r nodes of T_h lie in one orbit.
TEST(Tree, DeletedEdgePredictionMatchesEnumerationAtEveryLevel) {
  for (int h = 1; h <= 4; ++h) {
    const Graph t = GenFullBinaryTree(h);
    for (int r = 1; r <= h; ++r) {
      const BigInt predicted = PredictTreeDeletedEdgeOrder(h, r);
      for (Node v = (1 << r) - 1; v <= RightmostAtDepth(r); ++v) {
        const Graph pg = ApplyPerturbation(t, Perturbation::DeleteEdge(Edge{(v - 1) / 2, v}));
        EXPECT_EQ(AutOrder(pg).order, predicted) << "h=" << h << " r=" << r << " v=" << v;
      }
      const Graph pg = ApplyPerturbation(t, Perturbation::DeleteEdge(Edge{(RightmostAtDepth(r) - 1) / 2, RightmostAtDepth(r)}));
      EXPECT_EQ(Oracle(pg), predicted) << "h=" << h << " r=" << r;
      const RulePrediction rp = PredictForGraph(pg, "prop9");
      EXPECT_TRUE(rp.applicable) << rp.reason;
      EXPECT_EQ(rp.predicted, predicted);
    }
  }
}

TEST(Tree, PendantPredictionMatchesEnumerationAtEveryLevel) {
  for (int h = 1; h <= 4; ++h) {
    const Graph t = GenFullBinaryTree(h);
    for (int r = 1; r <= h; ++r) {
      const BigInt predicted = PredictTreePendantOrder(h, r);
      for (Node v = (1 << r) - 1; v <= RightmostAtDepth(r); ++v) {
        const Graph pg = ApplyPerturbation(t, Perturbation::PendantEdge(v));
        EXPECT_EQ(AutOrder(pg).order, predicted) << "h=" << h << " r=" << r << " v=" << v;
      }
      const Graph pg = ApplyPerturbation(t, Perturbation::PendantEdge(RightmostAtDepth(r)));
      EXPECT_EQ(Oracle(pg), predicted) << "h=" << h << " r=" << r;
      const RulePrediction rp = PredictForGraph(pg, "prop10");
      EXPECT_TRUE(rp.applicable) << rp.reason;
      EXPECT_EQ(rp.predicted, predicted);
    }
  }
}

TEST(Tree, HandCheckedPerturbedOrders) {
  // Height 3, edge above a leaf removed: the orphaned leaf and its sibling
  // are fixed apart from each other; 2 * 2 * 8 remains from the other sides.
  EXPECT_EQ(PredictTreeDeletedEdgeOrder(3, 3), 16);
  EXPECT_EQ(PredictTreeDeletedEdgeOrder(2, 2), 2);
  EXPECT_EQ(PredictTreeDeletedEdgeOrder(3, 2), 32);
  EXPECT_EQ(PredictTreeDeletedEdgeOrder(3, 1), 64);
  // Small trees where the root joins a star.
  EXPECT_EQ(PredictTreeDeletedEdgeOrder(1, 1), 2);
  EXPECT_EQ(PredictTreeDeletedEdgeOrder(2, 1), 12);
  EXPECT_EQ(PredictTreePendantOrder(1, 1), 2);
  EXPECT_EQ(PredictTreePendantOrder(3, 2), 96);
  EXPECT_EQ(PredictTreePendantOrder(2, 1), 12);
  EXPECT_EQ(PredictTreePendantOrder(3, 1), 64);
  EXPECT_EQ(PredictTreePendantOrder(3, 3), 16);
}

TEST(Tree, LevelOutOfRange) {
  EXPECT_EQ(KindOf([] { PredictTreeDeletedEdgeOrder(3, 0); }), ErrorKind::kLevelOutOfRange);
  EXPECT_EQ(KindOf([] { PredictTreeDeletedEdgeOrder(3, 4); }), ErrorKind::kLevelOutOfRange);
  EXPECT_EQ(KindOf([] { PredictTreePendantOrder(2, 3); }), ErrorKind::kLevelOutOfRange);
  // A pendant edge on the root is outside the rule's range.
  const Graph pg = ApplyPerturbation(GenFullBinaryTree(2), Perturbation::PendantEdge(0));
  EXPECT_FALSE(PredictForGraph(pg, "prop10").applicable);
}

TEST(Tree, RightmostAtDepth) {
  EXPECT_EQ(RightmostAtDepth(0), 0);
  EXPECT_EQ(RightmostAtDepth(1), 2);
  EXPECT_EQ(RightmostAtDepth(2), 6);
  EXPECT_EQ(RightmostAtDepth(3), 14);
}

TEST(CompleteGraph, PerturbedOrders) {
  const BigInt del[] = {4, 48, 1440, 80640};
  const BigInt pend[] = {6, 120, 5040, 362880};
  for (int i = 0; i < 4; ++i) {
    const int n = 4 + 2 * i;
    const Graph kn = GenComplete(n);
    const Graph d = ApplyPerturbation(kn, Perturbation::DeleteEdge(Edge{0, 1}));
    const Graph p = ApplyPerturbation(kn, Perturbation::PendantEdge(0));
    EXPECT_EQ(AutOrder(d).order, del[i]);
    EXPECT_EQ(PredictKnDeletedEdgeOrder(n), del[i]);
    EXPECT_EQ(PredictForGraph(d, "prop11").predicted, del[i]);
    EXPECT_EQ(AutOrder(p).order, pend[i]);
    EXPECT_EQ(PredictKnPendantOrder(n), pend[i]);
    EXPECT_EQ(PredictForGraph(p, "prop12").predicted, pend[i]);
  }
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(Oracle(ApplyPerturbation(GenComplete(n), Perturbation::PendantEdge(0))),
              PredictKnPendantOrder(n));
  }
  EXPECT_EQ(PredictKnDeletedEdgeOrder(2), 2);
  EXPECT_EQ(AutOrder(ApplyPerturbation(GenComplete(2), Perturbation::DeleteEdge())).order, 2);
  // K_2 plus a pendant edge is P_3; the general formula would say 1.
  EXPECT_EQ(AutOrder(ApplyPerturbation(GenComplete(2), Perturbation::PendantEdge(0))).order, 2);
  EXPECT_FALSE(PredictForGraph(ApplyPerturbation(GenComplete(2), Perturbation::PendantEdge(0)), "prop12").applicable);
}

TEST(PredictForGraph, RulesOnlyApplyToMatchingGraphs) {
  const Graph kn = GenComplete(5);
  EXPECT_FALSE(PredictForGraph(kn, "prop11").applicable);
  EXPECT_FALSE(PredictForGraph(kn, "prop8").applicable);
  EXPECT_TRUE(PredictForGraph(GenFullBinaryTree(3), "prop8").applicable);
  EXPECT_EQ(PredictForGraph(GenFullBinaryTree(3), "prop8").predicted, 128);
  const Graph sh = ApplyPerturbation(kn, Perturbation::Shadow(2));
  EXPECT_TRUE(PredictForGraph(sh, "prop7").applicable);
  EXPECT_EQ(PredictForGraph(sh, "prop7").predicted, 240);
  EXPECT_FALSE(PredictForGraph(sh, "prop12").applicable);
  EXPECT_EQ(KindOf([&] { PredictForGraph(kn, "prop99"); }), ErrorKind::kInvalidArgument);
}

TEST(Cospectral, StarAndCyclePlusPoint) {
  const Graph star = GenStar(4);
  const Graph c4k1(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const CospectralReport r = CospectralNonisomorphicCheck(star, c4k1);
  EXPECT_TRUE(r.same_charpoly);
  EXPECT_FALSE(r.isomorphic);
  EXPECT_EQ(CharPolyOf(star), testing::FaddeevLeVerrier(c4k1));
}

TEST(Cospectral, DistinctSpectraAndIsomorphicPairs) {
  const CospectralReport r = CospectralNonisomorphicCheck(GenComplete(3), GenPath(3));
  EXPECT_FALSE(r.same_charpoly);
  EXPECT_FALSE(r.isomorphic);
  const Graph g = RandomGraph(8, 0.5, 2);
  const CospectralReport same = CospectralNonisomorphicCheck(g, g.Relabeled(RandomPermutation(8, 3)));
  EXPECT_TRUE(same.same_charpoly);
  EXPECT_TRUE(same.isomorphic);
  EXPECT_EQ(KindOf([] { CospectralNonisomorphicCheck(Graph(), GenPath(2)); }), ErrorKind::kInvalidArgument);
}

}  // namespace
}  // namespace qperturb
