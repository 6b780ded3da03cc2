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
#include <string>
#include <vector>

#include "qperturb/graph.hpp"

namespace qperturb {

// Sizes are node counts, except for "binary_tree" where they are heights.
struct FamilySpec {
  std::string family;  // complete | erdos_renyi | rary_tree | random_regular | binary_tree
  std::vector<int> sizes;
};

struct DatasetSpec {
  std::uint64_t seed = 2024;
  std::vector<FamilySpec> families;
  double er_q = 0.5;
  int rary_r = 2;
  int regular_d = 3;
};

struct DatasetGraph {
  std::string id;  // graph_0, graph_1, ... in spec order
  Graph graph;
};

// K_n, E_{0.5,n}, level-order binary trees and random 3-regular graphs, each
// for n in {4, 6, 8, 10}: sixteen graphs, ids graph_0..graph_15.
DatasetSpec DefaultDatasetSpec();

// Seeded families draw from DeriveSeed(spec.seed, family, n), so one spec
// seed pins the whole dataset.
std::vector<DatasetGraph> BuildDataset(const DatasetSpec& spec);

inline std::vector<DatasetGraph> DefaultDataset() { return BuildDataset(DefaultDatasetSpec()); }

}  // namespace qperturb
