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

#include "qperturb/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qperturb {
namespace {

double Diameter(const std::vector<std::vector<double>>& simplex, std::size_t best) {
  double d = 0.0;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (i == best) continue;
    for (std::size_t k = 0; k < simplex[i].size(); ++k) {
      d = std::max(d, std::abs(simplex[i][k] - simplex[best][k]));
    }
  }
  return d;
}

}  // namespace

NelderMeadResult NelderMeadMinimize(const std::function<double(std::span<const double>)>& f,
                                    std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t dim = x0.size();
  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(dim + 1, x0);
  for (std::size_t k = 0; k < dim; ++k) simplex[k + 1][k] += options.initial_step;
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  auto along = [&](double t, std::vector<double>& out) {
    // centroid + t * (centroid - worst)
    const auto& worst = simplex[order[dim]];
    for (std::size_t k = 0; k < dim; ++k) out[k] = centroid[k] + t * (centroid[k] - worst[k]);
  };

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    // Stable sort keeps ties in vertex order, so runs are reproducible.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    if (Diameter(simplex, order[0]) <= options.tolerance) {
      result.converged = true;
      break;
    }
    if (result.iterations >= options.max_iterations) break;
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[order[i]][k];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const std::size_t worst = order[dim];
    const double best_value = values[order[0]];
    const double second_worst = values[order[dim - 1]];

    along(1.0, trial);
    const double reflected = eval(trial);
    if (reflected < best_value) {
      along(2.0, trial2);
      const double expanded = eval(trial2);
      if (expanded < reflected) {
        simplex[worst] = trial2;
        values[worst] = expanded;
      } else {
        simplex[worst] = trial;
        values[worst] = reflected;
      }
      continue;
    }
    if (reflected < second_worst) {
      simplex[worst] = trial;
      values[worst] = reflected;
      continue;
    }
    const bool outside = reflected < values[worst];
    along(outside ? 0.5 : -0.5, trial2);
    const double contracted = eval(trial2);
    if (contracted < (outside ? reflected : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = contracted;
      continue;
    }
    const auto& anchor = simplex[order[0]];
    for (std::size_t i = 1; i <= dim; ++i) {
      auto& v = simplex[order[i]];
      for (std::size_t k = 0; k < dim; ++k) v[k] = anchor[k] + 0.5 * (v[k] - anchor[k]);
      values[order[i]] = eval(v);
    }
  }
  result.x = simplex[order[0]];
  result.value = values[order[0]];
  return result;
}

}  // namespace qperturb
