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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qperturb/dataset.hpp"
#include "qperturb/metrics.hpp"
#include "qperturb/qaoa.hpp"
#include "qperturb/spectral.hpp"

namespace qperturb {

// Sweep over dataset graphs x variants x p x seeds. The text format read by
// ParseExperimentConfig is described in docs/experiment-config.md.
struct ExperimentConfig {
  DatasetSpec dataset = DefaultDatasetSpec();
  // "base" plus perturbation strings accepted by Perturbation::Parse.
  std::vector<std::string> variants{"base", "shadow:1", "shadow:2", "pendant", "delete"};
  std::vector<int> p_values{1, 2, 3, 4};
  int seeds = 3;
  int restarts = 3;
  OptimizerConfig optimizer;
  int threads = 0;      // 0: QPERTURB_THREADS, else hardware concurrency
  bool timing = false;  // off keeps runtime_ms at 0 and output byte-stable
};

ExperimentConfig ParseExperimentConfig(std::istream& in);
ExperimentConfig LoadExperimentConfig(const std::string& path);
void Validate(const ExperimentConfig& cfg);  // InvalidArgument

// Exact, optimizer-free facts about one (graph, variant) pair.
struct VariantSummary {
  std::string graph_id;
  std::string family;
  std::string perturbation;  // tag, e.g. shadow2
  std::string applied;       // resolved choice, e.g. delete:2-5; empty for base
  int n_pert = 0;
  int edges_pert = 0;
  int maxcut_base = 0;
  int maxcut_pert = 0;
  BigInt aut_base = 1;
  BigInt aut_pert = 1;
  BigInt aut_pert_max = 1;
  std::optional<BigInt> predicted_aut;  // closed-form prediction when one applies
  std::string prediction_rule;
  BoundsReport bounds;                  // of the perturbed graph
  std::optional<RadiusReport> radius;   // absent for base
  std::string error;
};

struct ExperimentResult {
  std::vector<MetricsRecord> records;  // graph, variant, p, seed order
  std::vector<VariantSummary> summaries;
};

// Deterministic per config: perturbed graphs are drawn from
// (seed, graph id, variant) and optimizer starts from (seed, graph id, p,
// seed index), so the result does not depend on thread count or scheduling.
// Failures are recorded in the rows' error column; the sweep continues.
ExperimentResult RunExperiment(const ExperimentConfig& cfg);

int ResolveThreadCount(int requested);

int ErrorRowCount(const std::vector<MetricsRecord>& records);

}  // namespace qperturb
