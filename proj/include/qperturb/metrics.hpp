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

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qperturb/poly.hpp"
#include "qperturb/qaoa.hpp"

namespace qperturb {

// One experiment cell: a (graph, perturbation, p, seed) optimization run and
// the exact quantities of its base and perturbed graphs.
//
// Optional fields are written as empty CSV cells. They are unset when the
// quantity is undefined (AR of an edgeless graph) or when the cell failed,
// in which case `error` holds "<ErrorKind>: <message>".
struct MetricsRecord {
  std::string graph_id;
  std::string family;
  int n = 0;                         // nodes of the base graph
  std::string perturbation = "base";  // base | shadow1 | shadow2 | pendant | delete
  int p = 0;
  int seed = 0;  // seed index within the cell
  int restarts = 0;
  double f_star = 0.0;
  int maxcut = 0;       // of the graph the cell optimized
  int maxcut_base = 0;  // of the unperturbed graph
  std::optional<double> ar;
  BigInt aut_order_base = 1;
  BigInt aut_order_pert = 1;
  // DeleteEdge: largest |Aut| over every single-edge deletion. Otherwise
  // equal to aut_order_pert.
  BigInt aut_order_pert_max = 1;
  std::optional<double> mu_base;
  std::optional<double> mu_pert;
  std::optional<double> i_prime;
  std::optional<double> i_sym;
  std::optional<double> i_sym_prime;
  double runtime_ms = 0.0;
  std::string error;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

// Throws EmptyInput.
MeanStd MeanAr(std::span<const double> ars);

// Runs must share graph_id and p (InvalidArgument otherwise) and carry an AR.
MeanStd MeanAr(std::span<const QaoaRun> runs);

// mu_base / mu_pert. Throws DivisionByZero when mu_pert <= 0.
double QuotientIPrime(double mu_base, double mu_pert);

// (maxcut_base * aut_pert) / (maxcut_pert * aut_base), reduced exactly before
// the final conversion. Throws DivisionByZero when a denominator factor is 0.
double SymmetryIndex(int maxcut_base, int maxcut_pert, const BigInt& aut_base,
                     const BigInt& aut_pert);

// (mu_base * aut_pert) / (mu_pert * aut_base).
double ApproxSymmetryIndex(double mu_base, double mu_pert, const BigInt& aut_base,
                           const BigInt& aut_pert);

// Fixed column order of the CSV; one column per MetricsRecord field.
const std::vector<std::string>& CsvColumns();

// Doubles are written in shortest round-trip form, so ParseCsv(WriteCsv(r))
// reproduces r exactly.
void WriteCsv(std::ostream& out, std::span<const MetricsRecord> records);
std::vector<MetricsRecord> ParseCsv(std::istream& in);  // ParseError on bad input

std::string FormatDouble(double x);

}  // namespace qperturb
