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

#include "qperturb/dataset.hpp"

#include "qperturb/error.hpp"
#include "qperturb/generators.hpp"
#include "qperturb/rng.hpp"

namespace qperturb {

DatasetSpec DefaultDatasetSpec() {
  DatasetSpec spec;
  const std::vector<int> sizes{4, 6, 8, 10};
  spec.families = {{"complete", sizes},
                   {"erdos_renyi", sizes},
                   {"rary_tree", sizes},
                   {"random_regular", sizes}};
  return spec;
}

std::vector<DatasetGraph> BuildDataset(const DatasetSpec& spec) {
  std::vector<DatasetGraph> out;
  for (const FamilySpec& fam : spec.families) {
    for (int size : fam.sizes) {
      const std::uint64_t seed =
          DeriveSeed({spec.seed, HashLabel(fam.family), static_cast<std::uint64_t>(size)});
      Graph g;
      if (fam.family == "complete") {
        g = GenComplete(size);
      } else if (fam.family == "erdos_renyi") {
        g = GenErdosRenyi(size, spec.er_q, seed);
      } else if (fam.family == "rary_tree") {
        g = GenFullRaryTree(spec.rary_r, size);
      } else if (fam.family == "random_regular") {
        g = GenRandomRegular(spec.regular_d, size, seed);
      } else if (fam.family == "binary_tree") {
        g = GenFullBinaryTree(size);
      } else {
        throw Error(ErrorKind::kInvalidArgument, "unknown graph family '" + fam.family + "'");
      }
      out.push_back({"graph_" + std::to_string(out.size()), std::move(g)});
    }
  }
  return out;
}

}  // namespace qperturb
