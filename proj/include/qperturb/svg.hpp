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
#include <string>
#include <utility>
#include <vector>

namespace qperturb::svg {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;  // (x, y), drawn in order
};

struct Panel {
  std::string title;
  std::vector<Series> series;
};

// Grid of small line charts sharing axes labels and a legend.
std::string LinePanels(const std::string& title, const std::string& xlabel,
                       const std::string& ylabel, const std::vector<Panel>& panels,
                       int columns = 4);

struct BarGroup {
  std::string label;
  std::vector<std::optional<double>> values;  // one per series; unset draws nothing
};

// Grouped vertical bars. With log10 set, bar heights are log10(value) and
// values <= 0 are skipped.
std::string BarChart(const std::string& title, const std::string& ylabel,
                     const std::vector<std::string>& series_names,
                     const std::vector<BarGroup>& groups, bool log10 = false);

std::string Escape(const std::string& text);

}  // namespace qperturb::svg
