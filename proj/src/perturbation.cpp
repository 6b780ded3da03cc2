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

#include "qperturb/perturbation.hpp"

#include <algorithm>
#include <charconv>

#include "qperturb/error.hpp"
#include "qperturb/rng.hpp"

namespace qperturb {
namespace {

int ParseInt(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kParseError,
                "bad integer '" + std::string(s) + "' in perturbation '" +
                    std::string(context) + "'");
  }
  return value;
}

std::string EdgeText(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph Annotate(Graph g, const GraphMeta& base, const std::string& resolved) {
  GraphMeta m = base;
  m.perturbation = base.perturbation ? *base.perturbation + "+" + resolved : resolved;
  return g.WithMeta(std::move(m));
}

}  // namespace

Perturbation Perturbation::Shadow(int s) {
  if (s < 1) throw Error(ErrorKind::kInvalidArgument, "shadow count must be >= 1");
  Perturbation p;
  p.kind = PerturbationKind::kShadow;
  p.shadow_count = s;
  return p;
}

Perturbation Perturbation::DeleteEdge(std::optional<Edge> e, std::uint64_t seed) {
  Perturbation p;
  p.kind = PerturbationKind::kDeleteEdge;
  if (e && e->u > e->v) std::swap(e->u, e->v);
  p.edge = e;
  p.seed = seed;
  return p;
}

Perturbation Perturbation::PendantEdge(std::optional<Node> u, std::uint64_t seed) {
  Perturbation p;
  p.kind = PerturbationKind::kPendantEdge;
  p.node = u;
  p.seed = seed;
  return p;
}

std::string Perturbation::ToString() const {
  switch (kind) {
    case PerturbationKind::kShadow:
      return "shadow:" + std::to_string(shadow_count);
    case PerturbationKind::kDeleteEdge:
      return edge ? "delete:" + EdgeText(*edge) : "delete";
    case PerturbationKind::kPendantEdge:
      return node ? "pendant:" + std::to_string(*node) : "pendant";
  }
  return {};
}

Perturbation Perturbation::Parse(std::string_view text, std::uint64_t seed) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "shadow") {
    return Shadow(arg.empty() ? 1 : ParseInt(arg, text));
  }
  if (head == "delete") {
    if (arg.empty()) return DeleteEdge(std::nullopt, seed);
    const auto dash = arg.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorKind::kParseError, "delete expects <u>-<v>, got '" + std::string(arg) + "'");
    }
    return DeleteEdge(Edge{ParseInt(arg.substr(0, dash), text), ParseInt(arg.substr(dash + 1), text)},
                      seed);
  }
  if (head == "pendant") {
    if (arg.empty()) return PendantEdge(std::nullopt, seed);
    return PendantEdge(ParseInt(arg, text), seed);
  }
  throw Error(ErrorKind::kParseError, "unknown perturbation '" + std::string(text) + "'");
}

std::string PerturbationTag(const Perturbation& p) {
  switch (p.kind) {
    case PerturbationKind::kShadow: return "shadow" + std::to_string(p.shadow_count);
    case PerturbationKind::kDeleteEdge: return "delete";
    case PerturbationKind::kPendantEdge: return "pendant";
  }
  return {};
}

Graph ApplyPerturbation(const Graph& g, const Perturbation& p) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  switch (p.kind) {
    case PerturbationKind::kShadow: {
      if (p.shadow_count < 1) {
        throw Error(ErrorKind::kInvalidArgument, "shadow count must be >= 1");
      }
      return Annotate(Graph(g.n() + p.shadow_count, std::move(edges)), g.meta(), p.ToString());
    }
    case PerturbationKind::kDeleteEdge: {
      if (edges.empty()) {
        throw Error(ErrorKind::kEmptyEdgeSet, "cannot delete an edge from an edgeless graph");
      }
      Edge target;
      if (p.edge) {
        target = *p.edge;
        if (target.u > target.v) std::swap(target.u, target.v);
        if (!g.HasNode(target.u) || !g.HasNode(target.v)) {
          throw Error(ErrorKind::kNodeOutOfRange, "edge " + EdgeText(target) + " leaves the node range");
        }
        if (!g.HasEdge(target.u, target.v)) {
          throw Error(ErrorKind::kEdgeNotPresent, "edge " + EdgeText(target) + " is not in the graph");
        }
      } else {
        Rng rng(p.seed);
        target = edges[rng.UniformIndex(edges.size())];
      }
      edges.erase(std::find(edges.begin(), edges.end(), target));
      return Annotate(Graph(g.n(), std::move(edges)), g.meta(), "delete:" + EdgeText(target));
    }
    case PerturbationKind::kPendantEdge: {
      Node u;
      if (p.node) {
        u = *p.node;
        if (!g.HasNode(u)) {
          throw Error(ErrorKind::kNodeOutOfRange, "node " + std::to_string(u) + " is not in the graph");
        }
      } else {
        if (g.n() == 0) throw Error(ErrorKind::kNodeOutOfRange, "null graph has no attachment node");
        Rng rng(p.seed);
        u = static_cast<Node>(rng.UniformIndex(static_cast<std::uint64_t>(g.n())));
      }
      edges.push_back({u, g.n()});
      return Annotate(Graph(g.n() + 1, std::move(edges)), g.meta(), "pendant:" + std::to_string(u));
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown perturbation kind");
}

std::vector<Graph> EnumerateEdgeDeletions(const Graph& g) {
  if (g.num_edges() == 0) {
    throw Error(ErrorKind::kEmptyEdgeSet, "cannot delete an edge from an edgeless graph");
  }
  std::vector<Graph> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    out.push_back(ApplyPerturbation(g, Perturbation::DeleteEdge(e)));
  }
  return out;
}

}  // namespace qperturb
