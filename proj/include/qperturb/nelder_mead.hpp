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

#include <functional>
#include <span>
#include <vector>

namespace qperturb {

struct NelderMeadOptions {
  // Stop once every vertex lies within this max-norm distance of the best.
  double tolerance = 1e-6;
  int max_iterations = 2000;
  double initial_step = 0.2;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

// Downhill simplex with the standard coefficients (reflect 1, expand 2,
// contract 1/2, shrink 1/2). Deterministic for a given objective and start.
NelderMeadResult NelderMeadMinimize(const std::function<double(std::span<const double>)>& f,
                                    std::vector<double> x0, const NelderMeadOptions& options = {});

}  // namespace qperturb
