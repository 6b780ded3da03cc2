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

#include <cmath>

#include "oracles.hpp"
#include "qperturb/dataset.hpp"
#include "qperturb/error.hpp"
#include "qperturb/generators.hpp"
#include "qperturb/maxcut.hpp"
#include "qperturb/perturbation.hpp"
#include "qperturb/spectral.hpp"

namespace qperturb {
namespace {

IntPoly P(std::vector<int> ascending) {
  std::vector<BigInt> c(ascending.begin(), ascending.end());
  return IntPoly(c);
}

Graph Fig3Square() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

TEST(IntPoly, Arithmetic) {
  const IntPoly a = P({-1, 1});  // x - 1
  const IntPoly b = P({1, 1});   // x + 1
  EXPECT_EQ(a * b, P({-1, 0, 1}));
  EXPECT_EQ(a + b, P({0, 2}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(b.Pow(3), P({1, 3, 3, 1}));
  EXPECT_EQ(P({0, 0, 1}).ComposeNegShift(), P({1, 2, 1}));  // (-x-1)^2
  const auto div = (a * b + P({5})).DivideByLinear(1);
  EXPECT_EQ(div.quotient, b);
  EXPECT_EQ(div.remainder, 5);
  EXPECT_EQ(P({-3, -8, -6, 0, 1}).ToString("x"), "x^4 - 6*x^2 - 8*x - 3");
  EXPECT_NEAR(static_cast<double>(P({-3, -8, -6, 0, 1}).Evaluate(3.0L)), 0.0, 1e-12);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(CharPolyOf(GenComplete(4)), P({-3, -8, -6, 0, 1}));
  EXPECT_EQ(CharPolyOf(GenStar(4)), P({0, 0, 0, -4, 0, 1}));
  EXPECT_EQ(CharPolyOf(Fig3Square()), P({0, 0, 0, -4, 0, 1}));
  EXPECT_EQ(CharPolyOf(GenEmpty(0)), P({1}));
  EXPECT_EQ(CharPolyOf(GenComplete(1)), P({0, 1}));
}

TEST(CharPoly, MatchesFaddeevLeVerrierOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 13);
    const Graph g = testing::RandomGraph(n, 0.2 + 0.01 * static_cast<double>(seed), seed);
    const IntPoly phi = CharPolyOf(g);
    EXPECT_EQ(phi, testing::FaddeevLeVerrier(g)) << "seed " << seed;
    EXPECT_EQ(phi.degree(), n);
    EXPECT_EQ(phi.leading(), 1);
    EXPECT_EQ(phi.coeff(n - 1), 0);                                  // zero trace
    EXPECT_EQ(phi.coeff(n - 2), -static_cast<int>(g.num_edges()));  // minus |E|
  }
}

TEST(CharPoly, CompleteGraphClosedFormAllN) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(CharPolyOf(GenComplete(n)), CompleteGraphCharPoly(n)) << n;
  }
}

TEST(CharPoly, RootsMatchEigenvaluesOnDataset) {
  for (const auto& dg : DefaultDataset()) {
    const IntPoly phi = CharPolyOf(dg.graph);
    for (double lambda : EigenDecomposition(dg.graph).eigenvalues) {
      // Scaled by the size of the monomials at lambda.
      const long double v = phi.Evaluate(lambda);
      EXPECT_LT(std::fabs(static_cast<double>(v)), 1e-6 * std::pow(1.0 + std::fabs(lambda), dg.graph.n()))
          << dg.id << " lambda " << lambda;
    }
  }
}

TEST(Eigen, Examples) {
  const auto p3 = EigenDecomposition(GenPath(3));
  ASSERT_EQ(p3.eigenvalues.size(), 3u);
  EXPECT_NEAR(p3.eigenvalues[0], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p3.eigenvalues[1], 0.0, 1e-12);
  EXPECT_NEAR(p3.eigenvalues[2], -std::sqrt(2.0), 1e-12);
  const auto k4 = EigenDecomposition(GenComplete(4));
  EXPECT_NEAR(k4.eigenvalues[0], 3.0, 1e-12);
  ASSERT_EQ(k4.distinct_count(), 2);
  EXPECT_EQ(k4.clusters[1].multiplicity, 3);
  const auto k1 = EigenDecomposition(GenComplete(1));
  EXPECT_EQ(k1.eigenvalues, std::vector<double>{0.0});
  EXPECT_NEAR(k1.clusters[0].projector(0, 0), 1.0, 1e-15);
}

TEST(Eigen, ProjectorsReconstructAdjacency) {
  for (const auto& dg : DefaultDataset()) {
    const auto spec = EigenDecomposition(dg.graph);
    const Eigen::MatrixXd a = AdjacencyMatrix(dg.graph);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(a.rows(), a.cols());
    for (std::size_t i = 0; i < spec.clusters.size(); ++i) {
      const auto& pi = spec.clusters[i].projector;
      sum += spec.clusters[i].value * pi;
      EXPECT_LT((pi * pi - pi).cwiseAbs().maxCoeff(), 1e-9);
      EXPECT_LT((pi - pi.transpose()).cwiseAbs().maxCoeff(), 1e-9);
      for (std::size_t j = i + 1; j < spec.clusters.size(); ++j) {
        EXPECT_LT((pi * spec.clusters[j].projector).cwiseAbs().maxCoeff(), 1e-9);
      }
    }
    EXPECT_LT((sum - a).cwiseAbs().maxCoeff(), 1e-9) << dg.id;
  }
}

TEST(Shadow, PredictionIsExact) {
  const IntPoly k4 = CharPolyOf(GenComplete(4));
  EXPECT_EQ(PredictedCharPolyShadow(k4, 1), P({0, -3, -8, -6, 0, 1}));
  EXPECT_EQ(PredictedCharPolyShadow(P({1}), 3), P({0, 0, 0, 1}));
  for (const auto& dg : DefaultDataset()) {
    for (int s : {1, 2}) {
      const Graph pert = ApplyPerturbation(dg.graph, Perturbation::Shadow(s));
      EXPECT_EQ(PredictedCharPolyShadow(CharPolyOf(dg.graph), s), CharPolyOf(pert)) << dg.id;
    }
  }
}

TEST(DeletedEdgeIdentity, Examples) {
  EXPECT_TRUE(VerifyDeletedEdgeIdentity(GenComplete(4), 0, 1).pass);
  EXPECT_TRUE(VerifyDeletedEdgeIdentity(GenComplete(4), 2, 3).pass);
  EXPECT_TRUE(VerifyDeletedEdgeIdentity(GenPath(3), 0, 1).pass);
  const auto k3 = VerifyDeletedEdgeIdentity(GenComplete(3), 0, 2);
  EXPECT_TRUE(k3.pass);
  EXPECT_EQ(k3.sample_points.size(), 7u);
  EXPECT_EQ(CharPolyOf(ApplyPerturbation(GenComplete(3), Perturbation::DeleteEdge(Edge{0, 2}))),
            P({0, -2, 0, 1}));
  EXPECT_THROW(VerifyDeletedEdgeIdentity(GenPath(3), 0, 2), Error);
}

TEST(DeletedEdgeIdentity, SamplePointsAvoidEigenvalues) {
  const Graph g = GenCycle(5);
  const auto rep = VerifyDeletedEdgeIdentity(g, 0, 1);
  EXPECT_TRUE(rep.pass);
  EXPECT_LT(rep.max_relative_discrepancy, 1e-9);
  for (double x : rep.sample_points) {
    for (double lambda : EigenDecomposition(g).eigenvalues) EXPECT_GE(std::fabs(x - lambda), 1e-2);
  }
}

TEST(DeletedEdgeIdentity, HoldsOnRandomGraphs) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Graph g = testing::RandomGraph(3 + static_cast<int>(seed % 8), 0.5, seed);
    for (const Edge& e : g.edges()) {
      const auto rep = VerifyDeletedEdgeIdentity(g, e.u, e.v);
      EXPECT_TRUE(rep.pass) << "seed " << seed << " discrepancy " << rep.max_relative_discrepancy;
    }
  }
}

TEST(TwoNodeDeletionIdentity, Examples) {
  EXPECT_TRUE(VerifyTwoNodeDeletionIdentity(GenComplete(4), 1, 3).pass);
  EXPECT_TRUE(VerifyTwoNodeDeletionIdentity(GenStar(4), 0, 1).pass);
  EXPECT_TRUE(VerifyTwoNodeDeletionIdentity(GenPath(3), 0, 2).pass);
  EXPECT_TRUE(VerifyTwoNodeDeletionIdentity(Fig3Square(), 0, 4).pass);
  EXPECT_THROW(VerifyTwoNodeDeletionIdentity(GenPath(3), 0, 9), Error);
  EXPECT_THROW(VerifyTwoNodeDeletionIdentity(GenPath(3), 1, 1), Error);
}

TEST(Pendant, Examples) {
  EXPECT_EQ(PredictedCharPolyPendant(GenComplete(1), 0), P({-1, 0, 1}));
  EXPECT_EQ(PredictedCharPolyPendant(GenPath(3), 0), P({1, 0, -3, 0, 1}));
  for (const auto& dg : DefaultDataset()) {
    for (Node u = 0; u < dg.graph.n(); ++u) {
      const Graph pert = ApplyPerturbation(dg.graph, Perturbation::PendantEdge(u));
      EXPECT_EQ(PredictedCharPolyPendant(dg.graph, u), CharPolyOf(pert)) << dg.id << " u=" << u;
    }
  }
}

TEST(TreeCharPoly, MatchesDirectComputation) {
  EXPECT_EQ(TreeCharPoly(GenFullBinaryTree(1), 0), P({0, -2, 0, 1}));
  EXPECT_EQ(TreeCharPoly(GenComplete(1), 0), P({0, 1}));
  for (int h = 0; h <= 4; ++h) {
    const Graph t = GenFullBinaryTree(h);
    EXPECT_EQ(TreeCharPoly(t, 0), CharPolyOf(t)) << h;
  }
  for (int n = 1; n <= 16; ++n) {
    for (int r = 2; r <= 4; ++r) {
      const Graph t = GenFullRaryTree(r, n);
      for (Node root : {0, n - 1}) EXPECT_EQ(TreeCharPoly(t, root), CharPolyOf(t));
    }
  }
  EXPECT_THROW(TreeCharPoly(GenCycle(4), 0), Error);
}

TEST(ComplementCharPoly, Examples) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(ComplementCharPoly(GenEmpty(n)), CompleteGraphCharPoly(n));
  EXPECT_EQ(ComplementCharPoly(GenComplete(4)), P({0, 0, 0, 0, 1}));
  EXPECT_EQ(ComplementCharPoly(GenCycle(4)), P({1, 0, -2, 0, 1}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (int n : {6, 8, 10, 12}) {
      const Graph g = GenRandomRegular(3, n, seed);
      EXPECT_EQ(ComplementCharPoly(g), CharPolyOf(g.Complement()));
    }
  }
  try {
    ComplementCharPoly(GenPath(3));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotRegular);
  }
}

TEST(Radius, Examples) {
  EXPECT_NEAR(SpectralRadius(GenComplete(6)), 5.0, 1e-9);
  EXPECT_NEAR(SpectralRadius(GenPath(3)), std::sqrt(2.0), 1e-12);
  EXPECT_EQ(SpectralRadius(GenComplete(1)), 0.0);
  const auto k4s = CheckRadiusPreservation(GenComplete(4), Perturbation::Shadow(2));
  EXPECT_TRUE(k4s.enforced);
  EXPECT_TRUE(k4s.pass);
  EXPECT_LE(k4s.delta, 1e-9);
  EXPECT_TRUE(CheckRadiusPreservation(GenPath(3), Perturbation::Shadow(1)).pass);
  const auto pend = CheckRadiusPreservation(GenComplete(4), Perturbation::PendantEdge(0));
  EXPECT_FALSE(pend.enforced);
  EXPECT_GT(pend.rho_perturbed, 3.0 + 1e-6);
}

TEST(Bounds, Examples) {
  const auto k4 = MaxCutUpperBounds(GenComplete(4));
  EXPECT_NEAR(k4.literal_bound, 2.0, 1e-9);
  EXPECT_NEAR(k4.sound_bound, 4.0, 1e-9);
  EXPECT_EQ(k4.maxcut, 4);
  EXPECT_TRUE(k4.literal_violated);
  EXPECT_FALSE(k4.sound_violated);
  const auto p3 = MaxCutUpperBounds(GenPath(3));
  EXPECT_NEAR(p3.literal_bound, 0.5 + std::sqrt(2.0) / 2, 1e-9);
  EXPECT_NEAR(p3.sound_bound, 1 + 3 * std::sqrt(2.0) / 4, 1e-9);
  EXPECT_EQ(p3.maxcut, 2);
  const auto k1 = MaxCutUpperBounds(GenComplete(1));
  EXPECT_NEAR(k1.literal_bound, 0.5, 1e-12);
  EXPECT_NEAR(k1.sound_bound, 0.0, 1e-12);
  EXPECT_FALSE(k1.sound_violated);
}

TEST(Bounds, SoundBoundHoldsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = testing::RandomGraph(2 + static_cast<int>(seed % 11), 0.5, seed + 7);
    const auto b = MaxCutUpperBounds(g);
    EXPECT_EQ(b.maxcut, testing::NaiveMaxCut(g).value);
    EXPECT_GE(b.sound_bound + 1e-9, b.maxcut);
  }
}

TEST(SpectralCheck, NamedChecks) {
  const Graph k4 = GenComplete(4);
  for (const char* name : {"prop1", "prop2", "prop3", "prop4", "prop5", "cor2"}) {
    const auto c = RunSpectralCheck(k4, name);
    EXPECT_TRUE(c.applicable) << name;
    EXPECT_TRUE(c.pass) << name;
  }
  const auto tree = RunSpectralCheck(GenFullBinaryTree(3), "cor1");
  EXPECT_TRUE(tree.pass);
  const auto cor1_k4 = RunSpectralCheck(k4, "cor1");
  EXPECT_FALSE(cor1_k4.applicable);
  EXPECT_FALSE(cor1_k4.pass);
  EXPECT_THROW(RunSpectralCheck(k4, "prop99"), Error);
}

}  // namespace
}  // namespace qperturb
