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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "qperturb/experiment.hpp"
#include "qperturb/metrics.hpp"

namespace qperturb {

// Monitoring thresholds; exceeding them is reported, not treated as failure.
inline constexpr double kShadowArNoise = 0.02;
inline constexpr double kIPrimeSpreadLimit = 0.1;

// Spread (max - min over p) of I' and I'_sym for one (graph, perturbation).
struct FlatnessRow {
  std::string graph_id;
  std::string perturbation;
  std::optional<double> i_prime_spread;
  std::optional<double> i_sym_prime_spread;
  bool flat = false;  // i_prime_spread <= kIPrimeSpreadLimit
};

// AR of a shadow cell against the base cell with the same (graph, p, seed).
struct ShadowDeltaRow {
  std::string graph_id;
  std::string perturbation;
  int p = 0;
  int seed = 0;
  double ar_base = 0.0;
  double ar_shadow = 0.0;
  double delta = 0.0;  // |ar_base - ar_shadow|
  bool within = false;
};

// Symmetry-count change against the mean AR change.
struct SymmetryRow {
  std::string graph_id;
  std::string perturbation;
  BigInt aut_base = 1;
  BigInt aut_pert = 1;
  std::string aut_ratio;  // reduced fraction, e.g. "2" or "1/6"
  std::optional<double> mean_mu_delta;  // mean over p of mu_pert - mu_base
  std::optional<bool> doubled;          // shadow2 only: aut_pert == 2 aut_base
};

// Both readings of "best mean AR" per (graph, perturbation).
struct BestMuRow {
  std::string graph_id;
  std::string perturbation;
  double max_of_seed_means = 0.0;  // max over p of mu
  double max_single_ar = 0.0;      // max over p and seeds of AR
};

struct HeuristicReport {
  std::vector<FlatnessRow> flatness;
  std::vector<ShadowDeltaRow> shadow;
  std::vector<SymmetryRow> symmetry;
  std::vector<BestMuRow> best_mu;
  std::vector<VariantSummary> bounds;  // only when built from a live run
  int shadow_violations = 0;
  int flatness_violations = 0;

  nlohmann::ordered_json ToJson() const;
};

// Throws InsufficientData when records are empty or cover fewer than two
// values of p. Rows with an error are ignored. The result does not depend on
// record order.
HeuristicReport BuildHeuristicReport(std::span<const MetricsRecord> records,
                                     std::span<const VariantSummary> summaries = {});

// The four charts: I' against p per graph, I_sym and I'_sym per graph,
// mean I' per perturbation and family, and |Aut| per graph and variant.
// Returns the written paths. Throws InsufficientData on empty input and
// IoError when a file cannot be written.
std::vector<std::string> WritePlots(std::span<const MetricsRecord> records, const std::string& dir);

// records.csv, heuristics.json and the plots under `dir`.
std::vector<std::string> WriteExperimentOutputs(const ExperimentResult& result, const std::string& dir);

nlohmann::ordered_json SummaryToJson(const VariantSummary& s);

}  // namespace qperturb
