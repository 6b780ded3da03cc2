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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qperturb/graph.hpp"
#include "qperturb/perturbation.hpp"
#include "qperturb/poly.hpp"

namespace qperturb {

// Characteristic polynomial det(x*I - A), monic, degree n.
//
// Sign convention: the alternative det(A - x*I) equals (-1)^n times this.
// Every exact identity below is stated for the monic form; the rational
// identity checks convert at their boundary (see ToAlternateSign).
using CharPoly = IntPoly;

// Berkowitz's division-free recurrence over arbitrary-precision integers.
// The null graph yields the constant 1.
CharPoly CharPolyOf(const Graph& g);

// (-1)^n * p(x), i.e. det(A - x*I) evaluated at x.
long double EvaluateAlternateSign(const CharPoly& p, int n, long double x);

// Eigenvalues within this distance share a projector.
inline constexpr double kEigenClusterTolerance = 1e-8;

struct EigenCluster {
  double value = 0.0;
  int multiplicity = 0;
  Eigen::MatrixXd projector;  // orthogonal projector onto the eigenspace
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;    // descending, with multiplicity
  std::vector<EigenCluster> clusters;  // descending by value

  int distinct_count() const { return static_cast<int>(clusters.size()); }
  // sum_i p_i(u,v) / (x - lambda_i), the (u,v) entry of the resolvent.
  double Resolvent(int u, int v, double x) const;
};

Eigen::MatrixXd AdjacencyMatrix(const Graph& g);

// Throws ConvergenceFailure if the symmetric solver reports failure.
SpectralDecomposition EigenDecomposition(const Graph& g,
                                         double cluster_tolerance = kEigenClusterTolerance);

// x^s * phi
CharPoly PredictedCharPolyShadow(const CharPoly& phi, int s);

// Outcome of checking a rational-function identity by evaluating both sides
// at real sample points kept away from every eigenvalue.
struct IdentityReport {
  std::string identity;
  std::vector<double> sample_points;
  double max_relative_discrepancy = 0.0;
  double tolerance = 1e-6;
  bool pass = false;
};

// 2n+1 points on [-n-1, n+1], each at least `min_gap` from every eigenvalue.
std::vector<double> IdentitySamplePoints(const SpectralDecomposition& spec, int n,
                                         double min_gap = 1e-2);

// phi_{G-uv} = phi_G - phi_{G-u-v} + 2 phi_G sum_i p_uv^(i) / (x - lambda_i),
// checked in the det(A - x*I) convention. Throws EdgeNotPresent.
IdentityReport VerifyDeletedEdgeIdentity(const Graph& g, Node u, Node v, double tolerance = 1e-6);

// phi_{G-u-v} = phi_G [R_uu R_vv - R_uv^2] with R the resolvent above.
// Throws NodeOutOfRange, or InvalidArgument when u == v.
IdentityReport VerifyTwoNodeDeletionIdentity(const Graph& g, Node u, Node v,
                                             double tolerance = 1e-6);

// x * phi_G - phi_{G-u}: the polynomial of g with a pendant edge at u.
CharPoly PredictedCharPolyPendant(const Graph& g, Node u);

// Bottom-up recursion over the rooted tree carrying, per node u, the
// polynomial of the subtree C(u) and of the forest C'(u) of u's child
// subtrees. Linear number of polynomial products. Throws NotATree.
CharPoly TreeCharPoly(const Graph& g, Node root);

// Polynomial of the complement of an r-regular graph:
//   (-1)^n (x - n + r + 1) / (x + r + 1) * phi_G(-x - 1).
// The division is exact; a nonzero remainder throws NonZeroRemainder.
// Throws NotRegular.
CharPoly ComplementCharPoly(const Graph& g);

// (x - n + 1)(x + 1)^(n-1)
CharPoly CompleteGraphCharPoly(int n);

// max |lambda_i|; 0 for the null graph.
double SpectralRadius(const Graph& g);

struct RadiusReport {
  std::string perturbation;
  double rho_base = 0.0;
  double rho_perturbed = 0.0;
  double delta = 0.0;  // |rho_perturbed - rho_base|
  bool equal = false;  // delta <= tolerance
  bool enforced = false;  // shadow perturbations must preserve the radius
  bool pass = false;      // !enforced || equal
};

RadiusReport CheckRadiusPreservation(const Graph& g, const Perturbation& p,
                                     double tolerance = 1e-9);

struct BoundsReport {
  double spectral_radius = 0.0;
  double lambda_min = 0.0;
  double literal_bound = 0.0;  // 1/2 + rho/2
  double sound_bound = 0.0;    // |E|/2 - n * lambda_min / 4
  int maxcut = 0;
  bool literal_violated = false;  // maxcut > literal_bound
  bool sound_violated = false;    // maxcut > sound_bound (never expected)
};

BoundsReport MaxCutUpperBounds(const Graph& g);

// Named verification over one graph, as exposed by `spectrum --check`:
// prop1 (shadow), prop2 (deleted edge), prop3 (two-node deletion),
// prop4 (pendant), cor1 (tree recursion), prop5 (regular complement),
// cor2 (complete graph closed form).
struct SpectralCheck {
  std::string name;
  bool applicable = true;
  bool pass = false;
  int cases = 0;
  double max_discrepancy = 0.0;  // rational identities only
  std::string detail;
};

SpectralCheck RunSpectralCheck(const Graph& g, const std::string& name);

}  // namespace qperturb
