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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qperturb/graph.hpp"
#include "qperturb/maxcut.hpp"
#include "qperturb/nelder_mead.hpp"

namespace qperturb {

// Per-layer angles. gamma_k lives in [0, 2*pi) and beta_k in [0, pi); the
// expectation is periodic with those periods, so construction wraps values
// into range.
class AngleSet {
 public:
  AngleSet() = default;
  AngleSet(std::vector<double> gamma, std::vector<double> beta);

  static AngleSet Zero(int p);

  int p() const { return static_cast<int>(gamma_.size()); }
  const std::vector<double>& gamma() const { return gamma_; }
  const std::vector<double>& beta() const { return beta_; }

  // Appends (gamma, beta) = (0, 0), which leaves the evolved state unchanged.
  AngleSet ExtendedWithIdentityLayer() const;

  friend bool operator==(const AngleSet&, const AngleSet&) = default;

 private:
  std::vector<double> gamma_;
  std::vector<double> beta_;
};

// Basis index x encodes the assignment little-endian: bit i of x is z_i.
using StateVector = std::vector<std::complex<double>>;

inline constexpr int kMaxSimulatedQubits = 16;

// d[x] = number of edges cut by the assignment encoded in x. These are the
// eigenvalues of (1/2) sum_{(i,j) in E} (1 - Z_i Z_j).
// Entries must be non-negative integers for Evolve.
std::vector<double> BuildCostDiagonal(const Graph& g);

// Uniform superposition, then for each layer k the diagonal phase
// exp(-i gamma_k d[x]) followed by exp(-i beta_k X) on every qubit.
StateVector Evolve(const Graph& g, const AngleSet& angles);
StateVector Evolve(int n, const std::vector<double>& cost, const AngleSet& angles);

// sum_x |amp_x|^2 d[x]
double Expectation(const Graph& g, const AngleSet& angles);
double Expectation(int n, const std::vector<double>& cost, const AngleSet& angles);

// Gate accounting of the QAOA circuit: one H per qubit, then per layer one
// ZZ rotation per edge and one RX per qubit.
struct CircuitLayer {
  std::vector<Edge> zz;
  std::vector<Node> rx;
};

struct CircuitShape {
  int qubits = 0;
  int hadamard = 0;
  int rx = 0;
  int zz = 0;
  std::vector<CircuitLayer> layers;
};

CircuitShape BuildCircuitShape(const Graph& g, int p);

struct OptimizerConfig {
  NelderMeadOptions simplex;  // tolerance 1e-6, at most 2000 iterations
};

struct RestartTrace {
  int index = 0;
  bool warm = false;  // the zero-extended warm start
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct QaoaRun {
  std::string graph_id;
  int p = 0;
  AngleSet best;
  double f_star = 0.0;
  std::optional<double> ar;  // unset until ApproximationRatio, or for edgeless graphs
  std::uint64_t seed = 0;
  int restarts = 0;
  int best_restart = 0;
  int iterations = 0;  // of the winning start
  bool converged = false;
  std::vector<RestartTrace> traces;
};

// Multi-start simplex search for max F. Start k (k < restarts) is drawn
// uniformly from the angle box with Rng(DeriveSeed({seed, k})). A warm start
// with p-1 layers is extended by an identity layer and tried last (one with p
// layers is used as is). The best value wins; ties go to the lowest start
// index. Throws TooLarge above kMaxSimulatedQubits.
QaoaRun Optimize(const Graph& g, int p, std::uint64_t seed, int restarts,
                 const std::optional<AngleSet>& warm_start = std::nullopt,
                 const OptimizerConfig& config = {});

// F* / MaxCut, clamped to 1 when F* overshoots by at most 1e-9. Throws
// ZeroCut when the optimum is 0 (edgeless graph).
double ApproximationRatio(double f_star, int maxcut);
double ApproximationRatio(QaoaRun& run, const CutSolution& opt);

struct TransferResult {
  double expectation = 0.0;
  int maxcut = 0;
  std::optional<double> ar;
};

// Evaluates the source run's angles on another graph.
TransferResult TransferParameters(const QaoaRun& source, const Graph& target);

}  // namespace qperturb
