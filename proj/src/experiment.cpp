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

#include "qperturb/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include "qperturb/autgroup.hpp"
#include "qperturb/error.hpp"
#include "qperturb/maxcut.hpp"
#include "qperturb/perturbation.hpp"
#include "qperturb/rng.hpp"

namespace qperturb {
namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    std::string item = Trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& text) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::kParseError, "bad value for '" + key + "': '" + text + "'");
  }
  return v;
}

// "1-4" or "1,2,5" or a mix: "1-3,6".
std::vector<int> ParseIntList(const std::string& key, const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : Split(text, ',')) {
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(ParseNumber<int>(key, item));
      continue;
    }
    const int lo = ParseNumber<int>(key, Trim(item.substr(0, dash)));
    const int hi = ParseNumber<int>(key, Trim(item.substr(dash + 1)));
    if (hi < lo) throw Error(ErrorKind::kParseError, "empty range in '" + key + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

bool ParseBool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw Error(ErrorKind::kParseError, "bad boolean for '" + key + "': '" + text + "'");
}

std::string ErrorText(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return std::string(ErrorKindName(err->kind())) + ": " + err->what();
  }
  return std::string("Internal: ") + e.what();
}

constexpr const char* kRules[] = {"prop7", "prop8", "prop9", "prop10", "prop11", "prop12"};

VariantSummary Summarize(const ExperimentConfig& cfg, const DatasetGraph& dg,
                         const std::string& variant, Graph& perturbed) {
  VariantSummary s;
  s.graph_id = dg.id;
  s.family = dg.graph.meta().family;
  const Graph& g = dg.graph;
  const auto aut_base = AutOrder(g).order;
  const auto mc_base = BruteForceMaxCut(g).value;
  if (variant == "base") {
    s.perturbation = "base";
    perturbed = g;
  } else {
    const std::uint64_t pseed = DeriveSeed({cfg.dataset.seed, HashLabel(dg.id), HashLabel(variant)});
    const Perturbation pert = Perturbation::Parse(variant, pseed);
    s.perturbation = PerturbationTag(pert);
    perturbed = ApplyPerturbation(g, pert);
    s.applied = perturbed.meta().perturbation.value_or("");
    s.radius = CheckRadiusPreservation(g, pert);
  }
  s.n_pert = perturbed.n();
  s.edges_pert = perturbed.num_edges();
  s.maxcut_base = mc_base;
  s.maxcut_pert = variant == "base" ? mc_base : BruteForceMaxCut(perturbed).value;
  s.aut_base = aut_base;
  s.aut_pert = variant == "base" ? aut_base : AutOrder(perturbed).order;
  s.aut_pert_max = s.aut_pert;
  if (s.perturbation == "delete") {
    for (const Graph& d : EnumerateEdgeDeletions(g)) {
      s.aut_pert_max = std::max(s.aut_pert_max, AutOrder(d).order);
    }
  }
  for (const char* rule : kRules) {
    const RulePrediction pred = PredictForGraph(perturbed, rule);
    if (pred.applicable) {
      s.predicted_aut = pred.predicted;
      s.prediction_rule = rule;
      break;
    }
  }
  s.bounds = MaxCutUpperBounds(perturbed);
  return s;
}

struct Job {
  std::size_t graph = 0;
  std::size_t variant = 0;
};

void RunJob(const ExperimentConfig& cfg, const DatasetGraph& dg, const std::string& variant,
            VariantSummary& summary, MetricsRecord* rows) {
  Graph perturbed;
  try {
    summary = Summarize(cfg, dg, variant, perturbed);
  } catch (const std::exception& e) {
    summary.graph_id = dg.id;
    summary.family = dg.graph.meta().family;
    summary.perturbation = variant == "base" ? "base" : variant;
    summary.error = ErrorText(e);
  }
  std::size_t row = 0;
  for (int p : cfg.p_values) {
    for (int k = 0; k < cfg.seeds; ++k, ++row) {
      MetricsRecord& r = rows[row];
      r.graph_id = dg.id;
      r.family = dg.graph.meta().family;
      r.n = dg.graph.n();
      r.perturbation = summary.perturbation;
      r.p = p;
      r.seed = k;
      r.restarts = cfg.restarts;
      if (!summary.error.empty()) {
        r.error = summary.error;
        continue;
      }
      r.maxcut = summary.maxcut_pert;
      r.maxcut_base = summary.maxcut_base;
      r.aut_order_base = summary.aut_base;
      r.aut_order_pert = summary.aut_pert;
      r.aut_order_pert_max = summary.aut_pert_max;
      try {
        const auto start = std::chrono::steady_clock::now();
        // The perturbation is left out of the seed: every variant of a graph
        // starts from the same angles at a given (p, seed index).
        const std::uint64_t oseed = DeriveSeed({cfg.dataset.seed, HashLabel(dg.id),
                                                static_cast<std::uint64_t>(p),
                                                static_cast<std::uint64_t>(k)});
        QaoaRun run = Optimize(perturbed, p, oseed, cfg.restarts, std::nullopt, cfg.optimizer);
        r.f_star = run.f_star;
        if (r.maxcut > 0) r.ar = ApproximationRatio(run.f_star, r.maxcut);
        if (r.maxcut_base > 0) r.i_sym = SymmetryIndex(r.maxcut_base, r.maxcut, r.aut_order_base, r.aut_order_pert);
        if (cfg.timing) {
          r.runtime_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start).count();
        }
      } catch (const std::exception& e) {
        r.error = ErrorText(e);
      }
    }
  }
}

// mu over seeds per (graph, variant, p), then the derived indices.
void FillAggregates(std::vector<MetricsRecord>& records) {
  using Key = std::tuple<std::string, std::string, int>;
  std::map<Key, std::vector<double>> ars;
  for (const MetricsRecord& r : records) {
    if (r.error.empty() && r.ar) ars[{r.graph_id, r.perturbation, r.p}].push_back(*r.ar);
  }
  auto mu = [&](const std::string& g, const std::string& v, int p) -> std::optional<double> {
    auto it = ars.find({g, v, p});
    if (it == ars.end()) return std::nullopt;
    return MeanAr(it->second).mean;
  };
  for (MetricsRecord& r : records) {
    if (!r.error.empty()) continue;
    r.mu_base = mu(r.graph_id, "base", r.p);
    r.mu_pert = mu(r.graph_id, r.perturbation, r.p);
    if (r.mu_base && r.mu_pert && *r.mu_pert > 0) {
      r.i_prime = QuotientIPrime(*r.mu_base, *r.mu_pert);
      r.i_sym_prime = ApproxSymmetryIndex(*r.mu_base, *r.mu_pert, r.aut_order_base, r.aut_order_pert);
    }
  }
}

}  // namespace

ExperimentConfig ParseExperimentConfig(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kParseError, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = Trim(std::string_view(line).substr(0, eq));
    const std::string value = Trim(std::string_view(line).substr(eq + 1));
    if (key == "seed") {
      cfg.dataset.seed = ParseNumber<std::uint64_t>(key, value);
    } else if (key == "families") {
      cfg.dataset.families.clear();
      for (const std::string& item : Split(value, ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw Error(ErrorKind::kParseError, "family entry needs name:sizes, got '" + item + "'");
        }
        cfg.dataset.families.push_back(
            {Trim(item.substr(0, colon)), ParseIntList(key, item.substr(colon + 1))});
      }
    } else if (key == "er_q") {
      cfg.dataset.er_q = ParseNumber<double>(key, value);
    } else if (key == "rary_r") {
      cfg.dataset.rary_r = ParseNumber<int>(key, value);
    } else if (key == "regular_d") {
      cfg.dataset.regular_d = ParseNumber<int>(key, value);
    } else if (key == "variants") {
      cfg.variants = Split(value, ',');
    } else if (key == "p") {
      cfg.p_values = ParseIntList(key, value);
    } else if (key == "seeds") {
      cfg.seeds = ParseNumber<int>(key, value);
    } else if (key == "restarts") {
      cfg.restarts = ParseNumber<int>(key, value);
    } else if (key == "tolerance") {
      cfg.optimizer.simplex.tolerance = ParseNumber<double>(key, value);
    } else if (key == "max_iterations") {
      cfg.optimizer.simplex.max_iterations = ParseNumber<int>(key, value);
    } else if (key == "initial_step") {
      cfg.optimizer.simplex.initial_step = ParseNumber<double>(key, value);
    } else if (key == "threads") {
      cfg.threads = ParseNumber<int>(key, value);
    } else if (key == "timing") {
      cfg.timing = ParseBool(key, value);
    } else {
      throw Error(ErrorKind::kParseError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  Validate(cfg);
  return cfg;
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open config '" + path + "'");
  return ParseExperimentConfig(in);
}

void Validate(const ExperimentConfig& cfg) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::kInvalidArgument, why); };
  if (cfg.dataset.families.empty()) bad("config needs at least one graph family");
  for (const auto& f : cfg.dataset.families) {
    if (f.sizes.empty()) bad("family '" + f.family + "' has no sizes");
  }
  if (cfg.variants.empty()) bad("config needs at least one variant");
  for (const std::string& v : cfg.variants) {
    if (v != "base") Perturbation::Parse(v);
  }
  if (cfg.p_values.empty()) bad("config needs at least one p");
  for (int p : cfg.p_values) {
    if (p < 1) bad("p must be >= 1");
  }
  if (cfg.seeds < 1) bad("seeds must be >= 1");
  if (cfg.restarts < 1) bad("restarts must be >= 1");
  if (cfg.optimizer.simplex.max_iterations < 1) bad("max_iterations must be >= 1");
  if (!(cfg.optimizer.simplex.tolerance > 0)) bad("tolerance must be > 0");
  if (cfg.threads < 0) bad("threads must be >= 0");
}

int ResolveThreadCount(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QPERTURB_THREADS")) {
    int v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ExperimentResult RunExperiment(const ExperimentConfig& cfg) {
  Validate(cfg);
  const std::vector<DatasetGraph> dataset = BuildDataset(cfg.dataset);
  std::vector<Job> jobs;
  for (std::size_t g = 0; g < dataset.size(); ++g) {
    for (std::size_t v = 0; v < cfg.variants.size(); ++v) jobs.push_back({g, v});
  }
  const std::size_t rows_per_job = cfg.p_values.size() * static_cast<std::size_t>(cfg.seeds);

  ExperimentResult result;
  result.records.resize(jobs.size() * rows_per_job);
  result.summaries.resize(jobs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      RunJob(cfg, dataset[jobs[j].graph], cfg.variants[jobs[j].variant], result.summaries[j],
             result.records.data() + j * rows_per_job);
    }
  };
  const int threads = std::min<int>(ResolveThreadCount(cfg.threads), static_cast<int>(jobs.size()));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  FillAggregates(result.records);
  return result;
}

int ErrorRowCount(const std::vector<MetricsRecord>& records) {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [](const MetricsRecord& r) { return !r.error.empty(); }));
}

}  // namespace qperturb
