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
#include <span>
#include <string>
#include <vector>

#include "qperturb/graph.hpp"
#include "qperturb/perturbation.hpp"

namespace qperturb {

// How a 0/1 assignment is scored.
//   kCut:     edges whose endpoints land on different sides (the MaxCut
//             objective, and the spectrum of the QAOA cost observable).
//   kLiteral: sum over edges of (1 - z_i z_j) read literally over {0,1};
//             only edges with both endpoints at 1 score 0.
enum class CutSemantics { kCut, kLiteral };

// Throws LengthMismatch when z.size() != n.
int CutValue(const Graph& g, std::span<const std::uint8_t> z,
             CutSemantics semantics = CutSemantics::kCut);

struct CutSolution {
  int value = 0;
  std::vector<std::uint8_t> witness;  // z_0 = 0
  // Optimal bipartitions, each complementary pair counted once.
  std::uint64_t degenerate_count = 0;
};

inline constexpr int kMaxBruteForceNodes = 24;

// Exhaustive sweep over the 2^(n-1) assignments with z_0 fixed to 0. Ties go
// to the lexicographically smallest witness (z_0 most significant). The
// sweep may be split across `threads` workers; the result does not depend
// on the split. Throws TooLarge above kMaxBruteForceNodes.
CutSolution BruteForceMaxCut(const Graph& g, int threads = 1);

struct ShiftReport {
  std::string perturbation;  // resolved, e.g. "pendant:0"
  int base = 0;
  int perturbed = 0;
  int shift = 0;
  // Shadow: 0. Pendant: +1. Delete: -1 or 0.
  bool consistent = false;
};

ShiftReport PerturbationShift(const Graph& g, const Perturbation& p);

}  // namespace qperturb
