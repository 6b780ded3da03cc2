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

#include "qperturb/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qperturb/error.hpp"
#include "qperturb/rng.hpp"

namespace qperturb {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

double Wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

void RequireSimulable(int n) {
  if (n > kMaxSimulatedQubits) {
    throw Error(ErrorKind::kTooLarge, "statevector simulation is capped at " +
                                          std::to_string(kMaxSimulatedQubits) + " qubits");
  }
}

}  // namespace

AngleSet::AngleSet(std::vector<double> gamma, std::vector<double> beta)
    : gamma_(std::move(gamma)), beta_(std::move(beta)) {
  if (gamma_.size() != beta_.size()) {
    throw Error(ErrorKind::kLengthMismatch, "gamma and beta need one entry per layer");
  }
  for (double& g : gamma_) g = Wrap(g, kTwoPi);
  for (double& b : beta_) b = Wrap(b, kPi);
}

AngleSet AngleSet::Zero(int p) {
  return AngleSet(std::vector<double>(p, 0.0), std::vector<double>(p, 0.0));
}

AngleSet AngleSet::ExtendedWithIdentityLayer() const {
  auto g = gamma_;
  auto b = beta_;
  g.push_back(0.0);
  b.push_back(0.0);
  return AngleSet(std::move(g), std::move(b));
}

std::vector<double> BuildCostDiagonal(const Graph& g) {
  RequireSimulable(g.n());
  const std::size_t dim = std::size_t{1} << g.n();
  std::vector<double> d(dim, 0.0);
  for (std::size_t x = 0; x < dim; ++x) {
    int cut = 0;
    for (const Edge& e : g.edges()) cut += static_cast<int>(((x >> e.u) ^ (x >> e.v)) & 1U);
    d[x] = cut;
  }
  return d;
}

StateVector Evolve(int n, const std::vector<double>& cost, const AngleSet& angles) {
  RequireSimulable(n);
  const std::size_t dim = std::size_t{1} << n;
  if (cost.size() != dim) throw Error(ErrorKind::kLengthMismatch, "cost diagonal size != 2^n");
  StateVector psi(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  // Cut values are small non-negative integers, so each layer needs only
  // max_cost + 1 distinct phases.
  double max_cost = 0.0;
  for (double c : cost) max_cost = std::max(max_cost, c);
  std::vector<std::complex<double>> phase(static_cast<std::size_t>(max_cost) + 1);
  for (int k = 0; k < angles.p(); ++k) {
    const double gamma = angles.gamma()[k];
    for (std::size_t c = 0; c < phase.size(); ++c) {
      phase[c] = std::polar(1.0, -gamma * static_cast<double>(c));
    }
    for (std::size_t x = 0; x < dim; ++x) {
      psi[x] *= phase[static_cast<std::size_t>(cost[x])];
    }
    // exp(-i beta X) = [[cos, -i sin], [-i sin, cos]] on each qubit.
    const double c = std::cos(angles.beta()[k]);
    const double s = std::sin(angles.beta()[k]);
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << q;
      for (std::size_t x = 0; x < dim; ++x) {
        if (x & bit) continue;
        const std::complex<double> a = psi[x];
        const std::complex<double> b = psi[x | bit];
        psi[x] = {c * a.real() + s * b.imag(), c * a.imag() - s * b.real()};
        psi[x | bit] = {c * b.real() + s * a.imag(), c * b.imag() - s * a.real()};
      }
    }
  }
  return psi;
}

StateVector Evolve(const Graph& g, const AngleSet& angles) {
  return Evolve(g.n(), BuildCostDiagonal(g), angles);
}

double Expectation(int n, const std::vector<double>& cost, const AngleSet& angles) {
  const StateVector psi = Evolve(n, cost, angles);
  // Dividing by the accumulated norm cancels rounding drift in the state's
  // length, so idle qubits leave the result unchanged to ~1e-14.
  long double f = 0.0L;
  long double norm = 0.0L;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    const long double w = std::norm(psi[x]);
    f += w * cost[x];
    norm += w;
  }
  return static_cast<double>(f / norm);
}

double Expectation(const Graph& g, const AngleSet& angles) {
  return Expectation(g.n(), BuildCostDiagonal(g), angles);
}

CircuitShape BuildCircuitShape(const Graph& g, int p) {
  if (p < 1) throw Error(ErrorKind::kInvalidArgument, "layer count must be >= 1");
  CircuitShape s;
  s.qubits = g.n();
  s.hadamard = g.n();
  for (int k = 0; k < p; ++k) {
    CircuitLayer layer;
    layer.zz.assign(g.edges().begin(), g.edges().end());
    for (Node v = 0; v < g.n(); ++v) layer.rx.push_back(v);
    s.zz += static_cast<int>(layer.zz.size());
    s.rx += static_cast<int>(layer.rx.size());
    s.layers.push_back(std::move(layer));
  }
  return s;
}

QaoaRun Optimize(const Graph& g, int p, std::uint64_t seed, int restarts,
                 const std::optional<AngleSet>& warm_start, const OptimizerConfig& config) {
  if (p < 1) throw Error(ErrorKind::kInvalidArgument, "layer count must be >= 1");
  if (restarts < 1) throw Error(ErrorKind::kInvalidArgument, "restarts must be >= 1");
  const int n = g.n();
  const std::vector<double> cost = BuildCostDiagonal(g);

  // x = (gamma_1..gamma_p, beta_1..beta_p); minimize -F.
  auto objective = [&](std::span<const double> x) {
    AngleSet a(std::vector<double>(x.begin(), x.begin() + p),
               std::vector<double>(x.begin() + p, x.end()));
    return -Expectation(n, cost, a);
  };

  std::vector<std::pair<std::vector<double>, bool>> starts;
  for (int k = 0; k < restarts; ++k) {
    Rng rng(DeriveSeed({seed, static_cast<std::uint64_t>(k)}));
    std::vector<double> x(2 * p);
    for (int i = 0; i < p; ++i) x[i] = rng.Uniform(0.0, kTwoPi);
    for (int i = 0; i < p; ++i) x[p + i] = rng.Uniform(0.0, kPi);
    starts.emplace_back(std::move(x), false);
  }
  if (warm_start) {
    AngleSet w = *warm_start;
    if (w.p() == p - 1) w = w.ExtendedWithIdentityLayer();
    if (w.p() != p) {
      throw Error(ErrorKind::kInvalidArgument, "warm start must have p or p-1 layers");
    }
    std::vector<double> x = w.gamma();
    x.insert(x.end(), w.beta().begin(), w.beta().end());
    starts.emplace_back(std::move(x), true);
  }

  QaoaRun run;
  run.graph_id = g.meta().family;
  run.p = p;
  run.seed = seed;
  run.restarts = restarts;
  double best = -1.0;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const auto result = NelderMeadMinimize(objective, starts[k].first, config.simplex);
    AngleSet angles(std::vector<double>(result.x.begin(), result.x.begin() + p),
                    std::vector<double>(result.x.begin() + p, result.x.end()));
    const double value = Expectation(n, cost, angles);
    run.traces.push_back({static_cast<int>(k), starts[k].second, value, result.iterations,
                          result.converged});
    if (value > best) {
      best = value;
      run.best = std::move(angles);
      run.f_star = value;
      run.best_restart = static_cast<int>(k);
      run.iterations = result.iterations;
      run.converged = result.converged;
    }
  }
  return run;
}

double ApproximationRatio(double f_star, int maxcut) {
  if (maxcut <= 0) throw Error(ErrorKind::kZeroCut, "approximation ratio undefined: MaxCut is 0");
  double ar = f_star / maxcut;
  if (ar > 1.0 && ar <= 1.0 + 1e-9) ar = 1.0;
  return ar;
}

double ApproximationRatio(QaoaRun& run, const CutSolution& opt) {
  run.ar = ApproximationRatio(run.f_star, opt.value);
  return *run.ar;
}

TransferResult TransferParameters(const QaoaRun& source, const Graph& target) {
  TransferResult r;
  r.expectation = Expectation(target, source.best);
  r.maxcut = BruteForceMaxCut(target).value;
  if (r.maxcut > 0) r.ar = ApproximationRatio(r.expectation, r.maxcut);
  return r;
}

}  // namespace qperturb
