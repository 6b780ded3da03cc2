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

#include "qperturb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "qperturb/autgroup.hpp"
#include "qperturb/error.hpp"
#include "qperturb/experiment.hpp"
#include "qperturb/generators.hpp"
#include "qperturb/graph_io.hpp"
#include "qperturb/maxcut.hpp"
#include "qperturb/perturbation.hpp"
#include "qperturb/qaoa.hpp"
#include "qperturb/report.hpp"
#include "qperturb/spectral.hpp"

namespace qperturb::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string output;
  bool pretty = false;

  std::string input;
  // gen
  std::string family;
  int n = 0, h = 0, r = 2, d = 3;
  double q = 0.5;
  // perturb
  std::string kind;
  // spectrum / aut
  std::string check, predict;
  // maxcut
  bool literal = false;
  // qaoa
  int p = 1, restarts = 5;
  std::string warm_start, transfer_to;
  // experiment / report
  std::string config, plots;
};

Graph LoadGraph(const std::string& path, std::istream& in) {
  if (path == "-") return ReadGraph(in);
  return ReadGraphFile(path);
}

Json ReadJsonFile(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::kIoError, "cannot open '" + path + "'");
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("invalid JSON: ") + e.what());
  }
}

Json PolyJson(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"ascending", coeffs}, {"text", p.ToString("x")}};
}

Json AnglesJson(const AngleSet& a) { return {{"gamma", a.gamma()}, {"beta", a.beta()}}; }

AngleSet AnglesFromJson(const Json& j) {
  const Json& src = j.contains("best") ? j.at("best") : j;
  try {
    return AngleSet(src.at("gamma").get<std::vector<double>>(), src.at("beta").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("angle set needs gamma and beta arrays: ") + e.what());
  }
}

Json RunJson(const QaoaRun& run, int maxcut) {
  Json j;
  j["graph_id"] = run.graph_id;
  j["p"] = run.p;
  j["seed"] = run.seed;
  j["restarts"] = run.restarts;
  j["f_star"] = run.f_star;
  j["maxcut"] = maxcut;
  j["ar"] = run.ar ? Json(*run.ar) : Json(nullptr);
  j["best"] = AnglesJson(run.best);
  j["best_restart"] = run.best_restart;
  j["iterations"] = run.iterations;
  j["converged"] = run.converged;
  Json traces = Json::array();
  for (const RestartTrace& t : run.traces) {
    traces.push_back({{"index", t.index},
                      {"warm", t.warm},
                      {"value", t.value},
                      {"iterations", t.iterations},
                      {"converged", t.converged}});
  }
  j["traces"] = traces;
  return j;
}

// Indented "key: value" lines for --pretty.
void PrettyPrint(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty() && !(v.is_array() && !v.front().is_structured())) {
        out << pad << k << ":\n";
        PrettyPrint(v, out, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        PrettyPrint(v, out, indent + 2);
      } else {
        out << pad << "- " << v.dump() << '\n';
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

class Emitter {
 public:
  Emitter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void Print(const Json& j) {
    std::ostringstream s;
    if (opt_.pretty) {
      PrettyPrint(j, s);
    } else {
      s << j.dump() << '\n';
    }
    Text(s.str());
  }

  void Text(const std::string& text) {
    if (opt_.output.empty() || opt_.output == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.output, std::ios::binary);
    if (!f) throw Error(ErrorKind::kIoError, "cannot write '" + opt_.output + "'");
    f << text;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

std::uint64_t SeedOr(const Options& o, std::uint64_t fallback) { return o.seed.value_or(fallback); }

int RunGen(const Options& o, Emitter& emit) {
  const std::uint64_t seed = SeedOr(o, 0);
  Graph g;
  const std::string& f = o.family;
  if (f == "complete") g = GenComplete(o.n);
  else if (f == "erdos_renyi") g = GenErdosRenyi(o.n, o.q, seed);
  else if (f == "binary_tree") g = GenFullBinaryTree(o.h);
  else if (f == "rary_tree") g = GenFullRaryTree(o.r, o.n);
  else if (f == "random_regular") g = GenRandomRegular(o.d, o.n, seed);
  else if (f == "path") g = GenPath(o.n);
  else if (f == "cycle") g = GenCycle(o.n);
  else if (f == "star") g = GenStar(o.n);
  else if (f == "empty") g = GenEmpty(o.n);
  else throw Error(ErrorKind::kInvalidArgument, "unknown family '" + f + "'");
  emit.Text(GraphToString(g));
  return kExitOk;
}

int RunPerturb(const Options& o, std::istream& in, Emitter& emit) {
  const Graph g = LoadGraph(o.input, in);
  const Perturbation p = Perturbation::Parse(o.kind, SeedOr(o, 0));
  emit.Text(GraphToString(ApplyPerturbation(g, p)));
  return kExitOk;
}

int RunSpectrum(const Options& o, std::istream& in, Emitter& emit) {
  const Graph g = LoadGraph(o.input, in);
  if (!o.check.empty()) {
    const SpectralCheck c = RunSpectralCheck(g, o.check);
    emit.Print({{"check", c.name},
               {"applicable", c.applicable},
               {"pass", c.pass},
               {"cases", c.cases},
               {"max_discrepancy", c.max_discrepancy},
               {"detail", c.detail}});
    return c.pass ? kExitOk : kExitDomainError;
  }
  const SpectralDecomposition spec = EigenDecomposition(g);
  const BoundsReport b = MaxCutUpperBounds(g);
  emit.Print({{"n", g.n()},
             {"eigenvalues", spec.eigenvalues},
             {"charpoly", PolyJson(CharPolyOf(g))},
             {"spectral_radius", b.spectral_radius},
             {"bounds",
              {{"lambda_min", b.lambda_min},
               {"literal_bound", b.literal_bound},
               {"sound_bound", b.sound_bound},
               {"maxcut", b.maxcut},
               {"literal_violated", b.literal_violated},
               {"sound_violated", b.sound_violated}}}});
  return kExitOk;
}

int RunAut(const Options& o, std::istream& in, Emitter& emit) {
  const Graph g = LoadGraph(o.input, in);
  const AutReport rep = AutOrder(g);
  Json j{{"order", rep.order.str()},
         {"generators", rep.generators.size()},
         {"base", rep.base},
         {"orbit_sizes", rep.orbit_sizes}};
  int code = kExitOk;
  if (!o.predict.empty()) {
    const RulePrediction pred = PredictForGraph(g, o.predict);
    Json pj{{"rule", pred.rule}, {"applicable", pred.applicable}};
    if (pred.applicable) {
      pj["predicted"] = pred.predicted.str();
      pj["match"] = pred.predicted == rep.order;
      if (pred.predicted != rep.order) code = kExitDomainError;
    } else {
      pj["reason"] = pred.reason;
    }
    j["prediction"] = pj;
  }
  emit.Print(j);
  return code;
}

int RunMaxCut(const Options& o, std::istream& in, Emitter& emit) {
  const Graph g = LoadGraph(o.input, in);
  const CutSolution s = BruteForceMaxCut(g, ResolveThreadCount(o.threads));
  Json j{{"value", s.value},
         {"witness", s.witness},
         {"degenerate_count", s.degenerate_count}};
  if (o.literal) {
    j["literal_objective"] = CutValue(g, s.witness, CutSemantics::kLiteral);
  }
  emit.Print(j);
  return kExitOk;
}

int RunQaoa(const Options& o, std::istream& in, Emitter& emit) {
  const Graph g = LoadGraph(o.input, in);
  std::optional<AngleSet> warm;
  if (!o.warm_start.empty()) warm = AnglesFromJson(ReadJsonFile(o.warm_start, in));
  QaoaRun run = Optimize(g, o.p, SeedOr(o, 0), o.restarts, warm);
  const CutSolution opt = BruteForceMaxCut(g, ResolveThreadCount(o.threads));
  if (opt.value > 0) ApproximationRatio(run, opt);
  Json j = RunJson(run, opt.value);
  if (!o.transfer_to.empty()) {
    const Graph target = LoadGraph(o.transfer_to, in);
    const TransferResult t = TransferParameters(run, target);
    j["transfer"] = {{"expectation", t.expectation},
                     {"maxcut", t.maxcut},
                     {"ar", t.ar ? Json(*t.ar) : Json(nullptr)}};
  }
  emit.Print(j);
  return kExitOk;
}

int RunExperimentCmd(const Options& o, std::ostream& out) {
  ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : LoadExperimentConfig(o.config);
  if (o.seed) cfg.dataset.seed = *o.seed;
  if (o.threads > 0) cfg.threads = o.threads;
  const std::string dir = o.output.empty() ? "." : o.output;
  const ExperimentResult result = RunExperiment(cfg);
  const auto files = WriteExperimentOutputs(result, dir);
  const int errors = ErrorRowCount(result.records);
  Json j{{"rows", result.records.size()}, {"error_rows", errors}, {"files", files}};
  if (o.pretty) {
    PrettyPrint(j, out);
  } else {
    out << j.dump() << '\n';
  }
  return errors == 0 ? kExitOk : kExitDomainError;
}

int RunReport(const Options& o, std::istream& in, Emitter& emit) {
  std::vector<MetricsRecord> records;
  if (o.input == "-") {
    records = ParseCsv(in);
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) throw Error(ErrorKind::kIoError, "cannot open '" + o.input + "'");
    records = ParseCsv(f);
  }
  Json j = BuildHeuristicReport(records).ToJson();
  if (!o.plots.empty()) j["plots"] = WritePlots(records, o.plots);
  emit.Print(j);
  return kExitOk;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Graph perturbation toolkit: spectra, symmetry, MaxCut and QAOA", "qperturb"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for generators, perturbations and the optimizer");
  app.add_option("--threads", o.threads, "Worker threads (0: QPERTURB_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("-o,--output", o.output, "Output file (experiment: output directory)");
  app.add_flag("--pretty", o.pretty, "Human-readable output instead of JSON");

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", o.family, "complete | erdos_renyi | binary_tree | rary_tree | "
                                        "random_regular | path | cycle | star | empty")
      ->required();
  gen->add_option("--n", o.n, "Node count (star: leaf count)");
  gen->add_option("--q", o.q, "Edge probability (erdos_renyi)");
  gen->add_option("--height", o.h, "Height (binary_tree)");
  gen->add_option("--r", o.r, "Branching factor (rary_tree)");
  gen->add_option("--d", o.d, "Degree (random_regular)");

  auto* perturb = app.add_subcommand("perturb", "Apply one perturbation");
  perturb->add_option("graph", o.input, "Graph JSON file or - for stdin")->required();
  perturb->add_option("--kind", o.kind, "shadow:<s> | delete[:u-v] | pendant[:u]")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum, characteristic polynomial and bounds");
  spectrum->add_option("graph", o.input)->required();
  spectrum->add_option("--check", o.check)
      ->check(CLI::IsMember({"prop1", "prop2", "prop3", "prop4", "cor1", "prop5", "cor2"}));

  auto* aut = app.add_subcommand("aut", "Automorphism group order");
  aut->add_option("graph", o.input)->required();
  aut->add_option("--predict", o.predict, "Compare against a closed-form rule")
      ->check(CLI::IsMember({"prop7", "prop8", "prop9", "prop10", "prop11", "prop12"}));

  auto* maxcut = app.add_subcommand("maxcut", "Exact MaxCut by enumeration");
  maxcut->add_option("graph", o.input)->required();
  maxcut->add_flag("--literal", o.literal, "Also report the 0/1 product objective of the witness");

  auto* qaoa = app.add_subcommand("qaoa", "Optimize QAOA angles");
  qaoa->add_option("graph", o.input)->required();
  qaoa->add_option("--p", o.p, "Layers")->check(CLI::PositiveNumber);
  qaoa->add_option("--restarts", o.restarts, "Random starts")->check(CLI::PositiveNumber);
  qaoa->add_option("--warm-start", o.warm_start, "Angle JSON (or a previous qaoa output)");
  qaoa->add_option("--transfer-to", o.transfer_to, "Evaluate the optimum on another graph");

  auto* experiment = app.add_subcommand("experiment", "Run the perturbation sweep");
  experiment->add_option("--config", o.config, "Key-value config file");

  auto* report = app.add_subcommand("report", "Heuristic report from a records CSV");
  report->add_option("csv", o.input)->required();
  report->add_option("--plots", o.plots, "Directory for SVG charts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Emitter emit(o, out);
  try {
    if (gen->parsed()) return RunGen(o, emit);
    if (perturb->parsed()) return RunPerturb(o, in, emit);
    if (spectrum->parsed()) return RunSpectrum(o, in, emit);
    if (aut->parsed()) return RunAut(o, in, emit);
    if (maxcut->parsed()) return RunMaxCut(o, in, emit);
    if (qaoa->parsed()) return RunQaoa(o, in, emit);
    if (experiment->parsed()) return RunExperimentCmd(o, out);
    if (report->parsed()) return RunReport(o, in, emit);
  } catch (const Error& e) {
    err << Json{{"error", ErrorKindName(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return kExitDomainError;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace qperturb::cli
