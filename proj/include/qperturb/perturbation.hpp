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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qperturb/graph.hpp"

namespace qperturb {

enum class PerturbationKind { kShadow, kDeleteEdge, kPendantEdge };

// One elementary graph perturbation. When the edge (DeleteEdge) or the
// attachment node (PendantEdge) is left unset, Apply draws it uniformly from
// `seed`.
struct Perturbation {
  PerturbationKind kind = PerturbationKind::kShadow;
  int shadow_count = 1;
  std::optional<Edge> edge;
  std::optional<Node> node;
  std::uint64_t seed = 0;

  static Perturbation Shadow(int s);
  static Perturbation DeleteEdge(std::optional<Edge> e = std::nullopt, std::uint64_t seed = 0);
  static Perturbation PendantEdge(std::optional<Node> u = std::nullopt, std::uint64_t seed = 0);

  // Text form used by the CLI and graph metadata:
  //   shadow:<s> | delete | delete:<u>-<v> | pendant | pendant:<u>
  std::string ToString() const;
  static Perturbation Parse(std::string_view text, std::uint64_t seed = 0);
};

// Short tag used for CSV rows and seed derivation: shadow1, shadow2,
// pendant, delete.
std::string PerturbationTag(const Perturbation& p);

// Shadow(s): s new isolated nodes n..n+s-1.
// DeleteEdge: the chosen edge is removed; nodes are kept.
// PendantEdge: new node n joined to the chosen u.
// The result's meta.perturbation records the resolved choice, e.g.
// "delete:0-1", so the output alone reproduces the perturbation.
Graph ApplyPerturbation(const Graph& g, const Perturbation& p);

// One graph per edge of g with that edge removed, in edge-list order.
std::vector<Graph> EnumerateEdgeDeletions(const Graph& g);

}  // namespace qperturb
