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

#include "qperturb/report.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "qperturb/error.hpp"
#include "qperturb/svg.hpp"

namespace qperturb {
namespace {

namespace fs = std::filesystem;
using Rational = boost::multiprecision::cpp_rational;
using PairKey = std::pair<std::string, std::string>;  // (graph_id, perturbation)

// "graph_10" sorts after "graph_9".
bool IdLess(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool PairLess(const PairKey& a, const PairKey& b) {
  if (a.first != b.first) return IdLess(a.first, b.first);
  return a.second < b.second;
}

// Records that went through the optimizer; failed cells are left out.
std::vector<const MetricsRecord*> Usable(std::span<const MetricsRecord> records) {
  std::vector<const MetricsRecord*> out;
  for (const MetricsRecord& r : records) {
    if (r.error.empty()) out.push_back(&r);
  }
  return out;
}

template <typename T>
nlohmann::ordered_json OptJson(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::kIoError, "write failed for '" + path.string() + "'");
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kIoError, "cannot create '" + dir.string() + "': " + ec.message());
}

}  // namespace

HeuristicReport BuildHeuristicReport(std::span<const MetricsRecord> records,
                                     std::span<const VariantSummary> summaries) {
  if (records.empty()) throw Error(ErrorKind::kInsufficientData, "no records");
  const auto rows = Usable(records);
  std::set<int> ps;
  for (const auto* r : rows) ps.insert(r->p);
  if (ps.size() < 2) {
    throw Error(ErrorKind::kInsufficientData, "heuristic report needs at least two values of p");
  }

  // Per (graph, perturbation): per-p aggregates (identical across seeds).
  struct PerP {
    std::optional<double> i_prime, i_sym_prime, mu_base, mu_pert;
  };
  std::map<PairKey, std::map<int, PerP>, decltype(&PairLess)> cells(&PairLess);
  std::map<PairKey, const MetricsRecord*, decltype(&PairLess)> first(&PairLess);
  std::map<std::tuple<std::string, int, int>, double> base_ar;
  std::map<PairKey, BestMuRow, decltype(&PairLess)> best(&PairLess);
  for (const auto* r : rows) {
    const PairKey key{r->graph_id, r->perturbation};
    auto& cell = cells[key][r->p];
    cell.i_prime = r->i_prime;
    cell.i_sym_prime = r->i_sym_prime;
    cell.mu_base = r->mu_base;
    cell.mu_pert = r->mu_pert;
    first.emplace(key, r);
    if (r->perturbation == "base" && r->ar) base_ar[{r->graph_id, r->p, r->seed}] = *r->ar;
    auto [it, fresh] = best.try_emplace(key, BestMuRow{r->graph_id, r->perturbation});
    if (r->mu_pert) it->second.max_of_seed_means = std::max(it->second.max_of_seed_means, *r->mu_pert);
    if (r->ar) it->second.max_single_ar = std::max(it->second.max_single_ar, *r->ar);
  }

  HeuristicReport rep;
  for (const auto& [key, by_p] : cells) {
    FlatnessRow f{key.first, key.second};
    std::optional<double> lo, hi, slo, shi;
    for (const auto& [p, c] : by_p) {
      if (c.i_prime) {
        lo = std::min(lo.value_or(*c.i_prime), *c.i_prime);
        hi = std::max(hi.value_or(*c.i_prime), *c.i_prime);
      }
      if (c.i_sym_prime) {
        slo = std::min(slo.value_or(*c.i_sym_prime), *c.i_sym_prime);
        shi = std::max(shi.value_or(*c.i_sym_prime), *c.i_sym_prime);
      }
    }
    if (lo) f.i_prime_spread = *hi - *lo;
    if (slo) f.i_sym_prime_spread = *shi - *slo;
    f.flat = f.i_prime_spread && *f.i_prime_spread <= kIPrimeSpreadLimit;
    if (f.i_prime_spread && !f.flat) ++rep.flatness_violations;
    rep.flatness.push_back(std::move(f));

    const MetricsRecord* r0 = first.at(key);
    SymmetryRow s{key.first, key.second, r0->aut_order_base, r0->aut_order_pert};
    s.aut_ratio = Rational(r0->aut_order_pert, r0->aut_order_base).str();
    double sum = 0.0;
    int count = 0;
    for (const auto& [p, c] : by_p) {
      if (c.mu_base && c.mu_pert) sum += *c.mu_pert - *c.mu_base, ++count;
    }
    if (count > 0) s.mean_mu_delta = sum / count;
    if (key.second == "shadow2") s.doubled = r0->aut_order_pert == 2 * r0->aut_order_base;
    rep.symmetry.push_back(std::move(s));
    rep.best_mu.push_back(best.at(key));
  }

  for (const auto* r : rows) {
    if (r->perturbation.rfind("shadow", 0) != 0 || !r->ar) continue;
    auto it = base_ar.find({r->graph_id, r->p, r->seed});
    if (it == base_ar.end()) continue;
    ShadowDeltaRow d{r->graph_id, r->perturbation, r->p, r->seed, it->second, *r->ar};
    d.delta = std::abs(d.ar_base - d.ar_shadow);
    d.within = d.delta <= kShadowArNoise;
    if (!d.within) ++rep.shadow_violations;
    rep.shadow.push_back(d);
  }
  std::sort(rep.shadow.begin(), rep.shadow.end(), [](const auto& a, const auto& b) {
    if (a.graph_id != b.graph_id) return IdLess(a.graph_id, b.graph_id);
    return std::tie(a.perturbation, a.p, a.seed) < std::tie(b.perturbation, b.p, b.seed);
  });

  rep.bounds.assign(summaries.begin(), summaries.end());
  std::sort(rep.bounds.begin(), rep.bounds.end(), [](const auto& a, const auto& b) {
    return PairLess({a.graph_id, a.perturbation}, {b.graph_id, b.perturbation});
  });
  return rep;
}

nlohmann::ordered_json SummaryToJson(const VariantSummary& s) {
  nlohmann::ordered_json j;
  j["graph_id"] = s.graph_id;
  j["family"] = s.family;
  j["perturbation"] = s.perturbation;
  j["applied"] = s.applied;
  j["n"] = s.n_pert;
  j["edges"] = s.edges_pert;
  j["maxcut_base"] = s.maxcut_base;
  j["maxcut"] = s.maxcut_pert;
  j["aut_order_base"] = s.aut_base.str();
  j["aut_order"] = s.aut_pert.str();
  j["aut_order_max"] = s.aut_pert_max.str();
  if (s.predicted_aut) {
    j["prediction"] = {{"rule", s.prediction_rule},
                       {"predicted", s.predicted_aut->str()},
                       {"matches", *s.predicted_aut == s.aut_pert}};
  } else {
    j["prediction"] = nullptr;
  }
  j["bounds"] = {{"spectral_radius", s.bounds.spectral_radius},
                 {"lambda_min", s.bounds.lambda_min},
                 {"literal_bound", s.bounds.literal_bound},
                 {"sound_bound", s.bounds.sound_bound},
                 {"literal_violated", s.bounds.literal_violated},
                 {"sound_violated", s.bounds.sound_violated}};
  if (s.radius) {
    j["radius"] = {{"rho_base", s.radius->rho_base},
                   {"rho_perturbed", s.radius->rho_perturbed},
                   {"delta", s.radius->delta},
                   {"enforced", s.radius->enforced},
                   {"pass", s.radius->pass}};
  } else {
    j["radius"] = nullptr;
  }
  j["error"] = s.error;
  return j;
}

nlohmann::ordered_json HeuristicReport::ToJson() const {
  nlohmann::ordered_json j;
  j["thresholds"] = {{"shadow_ar_noise", kShadowArNoise},
                     {"i_prime_spread", kIPrimeSpreadLimit},
                     {"note", "monitored statistics; exceeding a threshold is reported, not an error"}};
  j["shadow_violations"] = shadow_violations;
  j["flatness_violations"] = flatness_violations;
  auto& fl = j["flatness"] = nlohmann::ordered_json::array();
  for (const auto& f : flatness) {
    fl.push_back({{"graph_id", f.graph_id},
                  {"perturbation", f.perturbation},
                  {"i_prime_spread", OptJson(f.i_prime_spread)},
                  {"i_sym_prime_spread", OptJson(f.i_sym_prime_spread)},
                  {"flat", f.flat}});
  }
  auto& sh = j["shadow"] = nlohmann::ordered_json::array();
  for (const auto& d : shadow) {
    sh.push_back({{"graph_id", d.graph_id},
                  {"perturbation", d.perturbation},
                  {"p", d.p},
                  {"seed", d.seed},
                  {"ar_base", d.ar_base},
                  {"ar_shadow", d.ar_shadow},
                  {"delta", d.delta},
                  {"within", d.within}});
  }
  auto& sy = j["symmetry"] = nlohmann::ordered_json::array();
  for (const auto& s : symmetry) {
    sy.push_back({{"graph_id", s.graph_id},
                  {"perturbation", s.perturbation},
                  {"aut_order_base", s.aut_base.str()},
                  {"aut_order_pert", s.aut_pert.str()},
                  {"aut_ratio", s.aut_ratio},
                  {"mean_mu_delta", OptJson(s.mean_mu_delta)},
                  {"doubled", OptJson(s.doubled)}});
  }
  auto& bm = j["best_mu"] = nlohmann::ordered_json::array();
  for (const auto& b : best_mu) {
    bm.push_back({{"graph_id", b.graph_id},
                  {"perturbation", b.perturbation},
                  {"max_of_seed_means", b.max_of_seed_means},
                  {"max_single_ar", b.max_single_ar}});
  }
  auto& bd = j["bounds"] = nlohmann::ordered_json::array();
  for (const auto& s : bounds) bd.push_back(SummaryToJson(s));
  return j;
}

std::vector<std::string> WritePlots(std::span<const MetricsRecord> records, const std::string& dir) {
  if (records.empty()) throw Error(ErrorKind::kInsufficientData, "no records to plot");
  const auto rows = Usable(records);
  EnsureDir(dir);

  std::vector<std::string> graphs, perts;
  std::map<std::string, std::string> label;
  std::map<PairKey, std::map<int, double>> i_prime;  // one value per p
  std::map<PairKey, std::pair<double, std::pair<double, int>>> sym;  // i_sym, (sum i'_sym, count)
  std::map<PairKey, BigInt> aut;
  std::map<PairKey, std::pair<double, int>> fam_iprime;  // (family, pert) -> sum, count
  std::vector<std::string> families;
  for (const auto* r : rows) {
    if (std::find(graphs.begin(), graphs.end(), r->graph_id) == graphs.end()) {
      graphs.push_back(r->graph_id);
      label[r->graph_id] = r->graph_id + " " + r->family + " n=" + std::to_string(r->n);
    }
    if (std::find(families.begin(), families.end(), r->family) == families.end()) {
      families.push_back(r->family);
    }
    if (std::find(perts.begin(), perts.end(), r->perturbation) == perts.end()) {
      perts.push_back(r->perturbation);
    }
    const PairKey key{r->graph_id, r->perturbation};
    aut[key] = r->aut_order_pert;
    if (r->i_prime) i_prime[key][r->p] = *r->i_prime;
    if (r->i_sym) sym[key].first = *r->i_sym;
    if (r->i_sym_prime) {
      sym[key].second.first += *r->i_sym_prime;
      sym[key].second.second += 1;
    }
    if (r->i_prime && r->perturbation != "base") {
      auto& acc = fam_iprime[{r->family, r->perturbation}];
      acc.first += *r->i_prime;
      acc.second += 1;
    }
  }
  std::sort(graphs.begin(), graphs.end(), IdLess);
  std::vector<std::string> nonbase;
  for (const auto& p : perts) {
    if (p != "base") nonbase.push_back(p);
  }

  std::vector<svg::Panel> panels;
  for (const auto& g : graphs) {
    svg::Panel panel{label[g]};
    for (const auto& p : nonbase) {
      svg::Series s{p};
      for (auto [pp, v] : i_prime[{g, p}]) s.points.emplace_back(pp, v);
      panel.series.push_back(std::move(s));
    }
    panels.push_back(std::move(panel));
  }

  std::vector<svg::BarGroup> sym_groups;
  for (const auto& g : graphs) {
    for (const auto& p : nonbase) {
      auto it = sym.find({g, p});
      if (it == sym.end()) continue;
      svg::BarGroup grp{g + " " + p, {it->second.first, std::nullopt}};
      if (it->second.second.second > 0) {
        grp.values[1] = it->second.second.first / it->second.second.second;
      }
      sym_groups.push_back(std::move(grp));
    }
  }

  std::vector<svg::BarGroup> fam_groups;
  for (const auto& f : families) {
    svg::BarGroup grp{f};
    for (const auto& p : nonbase) {
      auto it = fam_iprime.find({f, p});
      if (it == fam_iprime.end()) {
        grp.values.push_back(std::nullopt);
      } else {
        grp.values.push_back(it->second.first / it->second.second);
      }
    }
    fam_groups.push_back(std::move(grp));
  }

  std::vector<svg::BarGroup> aut_groups;
  for (const auto& g : graphs) {
    svg::BarGroup grp{label[g]};
    for (const auto& p : perts) {
      auto it = aut.find({g, p});
      if (it == aut.end()) {
        grp.values.push_back(std::nullopt);
      } else {
        grp.values.push_back(it->second.convert_to<double>());
      }
    }
    aut_groups.push_back(std::move(grp));
  }

  const fs::path base(dir);
  const std::vector<std::pair<std::string, std::string>> files{
      {"i_prime_vs_p.svg", svg::LinePanels("I' against p", "p", "I'", panels)},
      {"symmetry_index.svg",
       svg::BarChart("Symmetry indices per graph and perturbation", "index",
                     {"I_sym", "I'_sym (mean over p)"}, sym_groups)},
      {"i_prime_by_perturbation.svg",
       svg::BarChart("Mean I' per perturbation and family", "I'", nonbase, fam_groups)},
      {"symmetry_counts.svg",
       svg::BarChart("Automorphism group order", "|Aut|", perts, aut_groups, true)},
  };
  std::vector<std::string> written;
  for (const auto& [name, text] : files) {
    WriteText(base / name, text);
    written.push_back((base / name).string());
  }
  return written;
}

std::vector<std::string> WriteExperimentOutputs(const ExperimentResult& result, const std::string& dir) {
  EnsureDir(dir);
  const fs::path base(dir);
  std::vector<std::string> written;
  {
    std::ofstream out(base / "records.csv", std::ios::binary);
    if (!out) throw Error(ErrorKind::kIoError, "cannot write records.csv in '" + dir + "'");
    WriteCsv(out, result.records);
    written.push_back((base / "records.csv").string());
  }
  nlohmann::ordered_json j;
  try {
    j = BuildHeuristicReport(result.records, result.summaries).ToJson();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInsufficientData) throw;
    j["error"] = std::string(ErrorKindName(e.kind())) + ": " + e.what();
    auto& bd = j["bounds"] = nlohmann::ordered_json::array();
    for (const auto& s : result.summaries) bd.push_back(SummaryToJson(s));
  }
  WriteText(base / "heuristics.json", j.dump(2) + "\n");
  written.push_back((base / "heuristics.json").string());
  for (auto& p : WritePlots(result.records, dir)) written.push_back(std::move(p));
  return written;
}

}  // namespace qperturb
