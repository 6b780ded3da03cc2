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

#include "qperturb/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qperturb/error.hpp"
#include "qperturb/maxcut.hpp"

namespace qperturb {

CharPoly CharPolyOf(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  for (const Edge& e : g.edges()) {
    a[e.u][e.v] = 1;
    a[e.v][e.u] = 1;
  }
  // Berkowitz: with A_k the leading k x k block, the coefficient vector
  // (highest degree first) of det(x I - A_k) is T_k times that of A_{k-1},
  // where T_k is lower-triangular Toeplitz with first column
  // (1, -a_kk, -R C, -R A_{k-1} C, ..., -R A_{k-1}^{k-2} C).
  std::vector<BigInt> poly{1};
  for (int k = 0; k < n; ++k) {
    std::vector<BigInt> col(k + 2, 0);
    col[0] = 1;
    col[1] = -a[k][k];
    std::vector<BigInt> w(k);  // A_{k-1}^j C
    for (int i = 0; i < k; ++i) w[i] = a[i][k];
    for (int j = 2; j <= k + 1; ++j) {
      BigInt dot = 0;
      for (int i = 0; i < k; ++i) dot += a[k][i] * w[i];
      col[j] = -dot;
      if (j == k + 1) break;
      std::vector<BigInt> next(k, 0);
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
          if (a[r][c] != 0) next[r] += a[r][c] * w[c];
        }
      }
      w = std::move(next);
    }
    std::vector<BigInt> updated(k + 2, 0);
    for (int r = 0; r < k + 2; ++r) {
      for (int c = 0; c <= std::min(r, k); ++c) updated[r] += col[r - c] * poly[c];
    }
    poly = std::move(updated);
  }
  std::reverse(poly.begin(), poly.end());
  return CharPoly(std::move(poly));
}

long double EvaluateAlternateSign(const CharPoly& p, int n, long double x) {
  const long double v = p.Evaluate(x);
  return (n % 2 == 0) ? v : -v;
}

double SpectralDecomposition::Resolvent(int u, int v, double x) const {
  double s = 0.0;
  for (const EigenCluster& c : clusters) s += c.projector(u, v) / (x - c.value);
  return s;
}

Eigen::MatrixXd AdjacencyMatrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

SpectralDecomposition EigenDecomposition(const Graph& g, double cluster_tolerance) {
  SpectralDecomposition out;
  if (g.n() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(AdjacencyMatrix(g));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergenceFailure, "symmetric eigensolver did not converge");
  }
  // Eigen returns ascending order; walk it backwards.
  const Eigen::VectorXd& vals = solver.eigenvalues();
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  const int n = g.n();
  for (int i = n - 1; i >= 0; --i) {
    out.eigenvalues.push_back(vals(i));
    if (out.clusters.empty() ||
        std::abs(out.clusters.back().value - vals(i)) > cluster_tolerance) {
      out.clusters.push_back({vals(i), 0, Eigen::MatrixXd::Zero(n, n)});
    }
    EigenCluster& c = out.clusters.back();
    c.projector += vecs.col(i) * vecs.col(i).transpose();
    ++c.multiplicity;
  }
  return out;
}

CharPoly PredictedCharPolyShadow(const CharPoly& phi, int s) {
  if (s < 1) throw Error(ErrorKind::kInvalidArgument, "shadow count must be >= 1");
  return phi.ShiftedUp(s);
}

std::vector<double> IdentitySamplePoints(const SpectralDecomposition& spec, int n,
                                         double min_gap) {
  const int count = 2 * n + 1;
  const double lo = -(n + 1.0);
  const double width = 2.0 * (n + 1.0);
  auto clear = [&](double x) {
    return std::all_of(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                       [&](double l) { return std::abs(x - l) >= min_gap; });
  };
  std::vector<double> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k) {
    // Cell midpoints; nudge inside the cell until clear of the spectrum.
    const double cell = width / count;
    double x = lo + (k + 0.5) * cell;
    for (int step = 1; !clear(x); ++step) {
      x = lo + (k + 0.5) * cell + ((step % 2) ? 1 : -1) * ((step + 1) / 2) * 0.37 * min_gap;
    }
    pts.push_back(x);
  }
  return pts;
}

namespace {

void RequireNode(const Graph& g, Node v) {
  if (!g.HasNode(v)) {
    throw Error(ErrorKind::kNodeOutOfRange, "node " + std::to_string(v) + " is not in the graph");
  }
}

IdentityReport Finish(std::string name, std::vector<double> pts, double worst, double tolerance) {
  IdentityReport r;
  r.identity = std::move(name);
  r.sample_points = std::move(pts);
  r.max_relative_discrepancy = worst;
  r.tolerance = tolerance;
  r.pass = worst <= tolerance;
  return r;
}

long double MaxAbs(std::initializer_list<long double> xs) {
  long double m = 0.0L;
  for (long double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

IdentityReport VerifyDeletedEdgeIdentity(const Graph& g, Node u, Node v, double tolerance) {
  if (!g.HasEdge(u, v)) {
    throw Error(ErrorKind::kEdgeNotPresent,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not in the graph");
  }
  const Graph minus_edge = ApplyPerturbation(g, Perturbation::DeleteEdge(Edge{u, v}));
  const Node pair[] = {u, v};
  const Graph minus_nodes = g.WithoutNodes(pair);
  const CharPoly phi = CharPolyOf(g);
  const CharPoly phi_edge = CharPolyOf(minus_edge);
  const CharPoly phi_nodes = CharPolyOf(minus_nodes);
  const SpectralDecomposition spec = EigenDecomposition(g);
  auto pts = IdentitySamplePoints(spec, g.n());

  double worst = 0.0;
  for (double x : pts) {
    const long double lhs = EvaluateAlternateSign(phi_edge, minus_edge.n(), x);
    const long double full = EvaluateAlternateSign(phi, g.n(), x);
    const long double removed = EvaluateAlternateSign(phi_nodes, minus_nodes.n(), x);
    const long double resolvent_term = 2.0L * full * spec.Resolvent(u, v, x);
    const long double rhs = full - removed + resolvent_term;
    const long double scale = std::max(1.0L, MaxAbs({lhs, full, removed, resolvent_term}));
    worst = std::max(worst, static_cast<double>(std::abs(lhs - rhs) / scale));
  }
  return Finish("deleted_edge", std::move(pts), worst, tolerance);
}

IdentityReport VerifyTwoNodeDeletionIdentity(const Graph& g, Node u, Node v, double tolerance) {
  RequireNode(g, u);
  RequireNode(g, v);
  if (u == v) throw Error(ErrorKind::kInvalidArgument, "two-node deletion needs distinct nodes");
  const Node pair[] = {u, v};
  const Graph minus_nodes = g.WithoutNodes(pair);
  const CharPoly phi = CharPolyOf(g);
  const CharPoly phi_nodes = CharPolyOf(minus_nodes);
  const SpectralDecomposition spec = EigenDecomposition(g);
  auto pts = IdentitySamplePoints(spec, g.n());

  double worst = 0.0;
  for (double x : pts) {
    const long double lhs = EvaluateAlternateSign(phi_nodes, minus_nodes.n(), x);
    const long double full = EvaluateAlternateSign(phi, g.n(), x);
    const long double ruu = spec.Resolvent(u, u, x);
    const long double rvv = spec.Resolvent(v, v, x);
    const long double ruv = spec.Resolvent(u, v, x);
    const long double diag_term = full * ruu * rvv;
    const long double cross_term = full * ruv * ruv;
    const long double rhs = diag_term - cross_term;
    const long double scale = std::max(1.0L, MaxAbs({lhs, diag_term, cross_term}));
    worst = std::max(worst, static_cast<double>(std::abs(lhs - rhs) / scale));
  }
  return Finish("two_node_deletion", std::move(pts), worst, tolerance);
}

CharPoly PredictedCharPolyPendant(const Graph& g, Node u) {
  RequireNode(g, u);
  const Node gone[] = {u};
  return CharPolyOf(g).ShiftedUp(1) - CharPolyOf(g.WithoutNodes(gone));
}

CharPoly TreeCharPoly(const Graph& g, Node root) {
  if (!g.IsTree()) throw Error(ErrorKind::kNotATree, "graph is not a tree");
  RequireNode(g, root);
  const int n = g.n();
  // Preorder with parents; children are processed before parents by
  // walking the order backwards.
  std::vector<Node> order;
  std::vector<Node> parent(n, -1);
  order.reserve(n);
  std::vector<Node> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const Node u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Node w : g.neighbors(u)) {
      if (parent[w] == -1) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  // subtree[u] is phi of C(u); forest[u] is phi of C'(u).
  std::vector<CharPoly> subtree(n), forest(n);
  const CharPoly x = CharPoly::Monomial(1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Node u = *it;
    std::vector<Node> kids;
    for (Node w : g.neighbors(u)) {
      if (w != root && parent[w] == u) kids.push_back(w);
    }
    CharPoly prod = CharPoly::Constant(1);
    for (Node c : kids) prod = prod * subtree[c];
    CharPoly correction;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      CharPoly term = forest[kids[i]];
      for (std::size_t j = 0; j < kids.size(); ++j) {
        if (j != i) term = term * subtree[kids[j]];
      }
      correction = correction + term;
    }
    forest[u] = prod;
    subtree[u] = x * prod - correction;
  }
  return subtree[root];
}

CharPoly ComplementCharPoly(const Graph& g) {
  const auto r = g.RegularDegree();
  if (!r) throw Error(ErrorKind::kNotRegular, "complement formula needs a regular graph");
  const int n = g.n();
  const CharPoly numerator = CharPoly::Linear(n - *r - 1) * CharPolyOf(g).ComposeNegShift();
  const auto division = numerator.DivideByLinear(-(*r + 1));
  if (division.remainder != 0) {
    throw Error(ErrorKind::kNonZeroRemainder,
                "division by (x + r + 1) left remainder " + division.remainder.str());
  }
  return (n % 2 == 0) ? division.quotient : -division.quotient;
}

CharPoly CompleteGraphCharPoly(int n) {
  if (n == 0) return CharPoly::Constant(1);
  return CharPoly::Linear(n - 1) * CharPoly::Linear(-1).Pow(n - 1);
}

double SpectralRadius(const Graph& g) {
  const SpectralDecomposition spec = EigenDecomposition(g);
  double rho = 0.0;
  for (double l : spec.eigenvalues) rho = std::max(rho, std::abs(l));
  return rho;
}

RadiusReport CheckRadiusPreservation(const Graph& g, const Perturbation& p, double tolerance) {
  const Graph perturbed = ApplyPerturbation(g, p);
  RadiusReport r;
  r.perturbation = perturbed.meta().perturbation.value_or(p.ToString());
  r.rho_base = SpectralRadius(g);
  r.rho_perturbed = SpectralRadius(perturbed);
  r.delta = std::abs(r.rho_perturbed - r.rho_base);
  r.equal = r.delta <= tolerance;
  r.enforced = p.kind == PerturbationKind::kShadow;
  r.pass = !r.enforced || r.equal;
  return r;
}

BoundsReport MaxCutUpperBounds(const Graph& g) {
  BoundsReport b;
  const SpectralDecomposition spec = EigenDecomposition(g);
  for (double l : spec.eigenvalues) b.spectral_radius = std::max(b.spectral_radius, std::abs(l));
  b.lambda_min = spec.eigenvalues.empty() ? 0.0 : spec.eigenvalues.back();
  b.literal_bound = 0.5 + 0.5 * b.spectral_radius;
  b.sound_bound = static_cast<double>(g.num_edges()) / 2.0 - g.n() * b.lambda_min / 4.0;
  b.maxcut = BruteForceMaxCut(g).value;
  b.literal_violated = b.maxcut > b.literal_bound;
  b.sound_violated = b.maxcut > b.sound_bound + 1e-9;
  return b;
}

SpectralCheck RunSpectralCheck(const Graph& g, const std::string& name) {
  SpectralCheck c;
  c.name = name;
  const int n = g.n();
  if (name == "prop1") {
    const CharPoly phi = CharPolyOf(g);
    c.pass = true;
    for (int s : {1, 2}) {
      ++c.cases;
      c.pass &= PredictedCharPolyShadow(phi, s) ==
                CharPolyOf(ApplyPerturbation(g, Perturbation::Shadow(s)));
    }
  } else if (name == "prop2") {
    c.pass = true;
    for (const Edge& e : g.edges()) {
      const auto r = VerifyDeletedEdgeIdentity(g, e.u, e.v);
      ++c.cases;
      c.pass &= r.pass;
      c.max_discrepancy = std::max(c.max_discrepancy, r.max_relative_discrepancy);
    }
    c.applicable = c.cases > 0;
  } else if (name == "prop3") {
    c.pass = true;
    for (Node u = 0; u < n; ++u) {
      for (Node v = u + 1; v < n; ++v) {
        const auto r = VerifyTwoNodeDeletionIdentity(g, u, v);
        ++c.cases;
        c.pass &= r.pass;
        c.max_discrepancy = std::max(c.max_discrepancy, r.max_relative_discrepancy);
      }
    }
    c.applicable = c.cases > 0;
  } else if (name == "prop4") {
    c.pass = true;
    for (Node u = 0; u < n; ++u) {
      ++c.cases;
      c.pass &= PredictedCharPolyPendant(g, u) ==
                CharPolyOf(ApplyPerturbation(g, Perturbation::PendantEdge(u)));
    }
    c.applicable = c.cases > 0;
  } else if (name == "cor1") {
    c.applicable = g.IsTree();
    if (c.applicable) {
      const CharPoly direct = CharPolyOf(g);
      c.pass = true;
      for (Node root = 0; root < n; ++root) {
        ++c.cases;
        c.pass &= TreeCharPoly(g, root) == direct;
      }
    }
  } else if (name == "prop5") {
    c.applicable = g.RegularDegree().has_value();
    if (c.applicable) {
      c.cases = 1;
      c.pass = ComplementCharPoly(g) == CharPolyOf(g.Complement());
    }
  } else if (name == "cor2") {
    c.applicable = n > 1 && g.num_edges() == static_cast<std::size_t>(n) * (n - 1) / 2;
    if (c.applicable) {
      c.cases = 1;
      c.pass = CharPolyOf(g) == CompleteGraphCharPoly(n);
    }
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown spectral check '" + name + "'");
  }
  if (!c.applicable) {
    c.pass = false;
    c.detail = "check does not apply to this graph";
  }
  return c;
}

}  // namespace qperturb
