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

#include "qperturb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qperturb::svg {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const char* Color(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

// Fixed precision keeps the output byte-stable across runs.
std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string Tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void Add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void Finish() {
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi - lo < 1e-9) lo -= 0.5, hi += 0.5;
  }
};

void Header(std::ostringstream& o, int w, int h, const std::string& title) {
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
    << "\" viewBox=\"0 0 " << w << ' ' << h << "\" font-family=\"sans-serif\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\">"
    << Escape(title) << "</text>\n";
}

void Legend(std::ostringstream& o, const std::vector<std::string>& names, double x, double y) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    const double yy = y + 16.0 * static_cast<double>(i);
    o << "<rect x=\"" << Num(x) << "\" y=\"" << Num(yy - 9) << "\" width=\"10\" height=\"10\" fill=\""
      << Color(i) << "\"/>"
      << "<text x=\"" << Num(x + 14) << "\" y=\"" << Num(yy) << "\" font-size=\"11\">"
      << Escape(names[i]) << "</text>\n";
  }
}

}  // namespace

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string LinePanels(const std::string& title, const std::string& xlabel,
                       const std::string& ylabel, const std::vector<Panel>& panels, int columns) {
  constexpr int kPanelW = 240, kPanelH = 170, kPad = 40, kTop = 40, kLegendW = 130;
  columns = std::max(1, std::min<int>(columns, static_cast<int>(std::max<std::size_t>(1, panels.size()))));
  const int rows = static_cast<int>((panels.size() + columns - 1) / columns);
  const int width = columns * kPanelW + kLegendW + kPad;
  const int height = kTop + std::max(1, rows) * kPanelH + kPad;

  std::vector<std::string> names;
  Range xr, yr;
  for (const Panel& p : panels) {
    for (const Series& s : p.series) {
      if (std::find(names.begin(), names.end(), s.name) == names.end()) names.push_back(s.name);
      for (auto [x, y] : s.points) xr.Add(x), yr.Add(y);
    }
  }
  xr.Finish();
  yr.Finish();

  std::ostringstream o;
  Header(o, width, height, title);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double ox = kPad + static_cast<double>(i % columns) * kPanelW;
    const double oy = kTop + static_cast<double>(i / columns) * kPanelH;
    const double pw = kPanelW - 30.0, ph = kPanelH - 50.0;
    auto px = [&](double x) { return ox + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return oy + 20 + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };
    o << "<g>\n<text x=\"" << Num(ox + pw / 2) << "\" y=\"" << Num(oy + 12)
      << "\" text-anchor=\"middle\" font-size=\"12\">" << Escape(panels[i].title) << "</text>\n"
      << "<rect x=\"" << Num(ox) << "\" y=\"" << Num(oy + 20) << "\" width=\"" << Num(pw)
      << "\" height=\"" << Num(ph) << "\" fill=\"none\" stroke=\"#999\"/>\n";
    o << "<text x=\"" << Num(ox - 3) << "\" y=\"" << Num(py(yr.hi) + 4)
      << "\" text-anchor=\"end\" font-size=\"9\">" << Tick(yr.hi) << "</text>"
      << "<text x=\"" << Num(ox - 3) << "\" y=\"" << Num(py(yr.lo))
      << "\" text-anchor=\"end\" font-size=\"9\">" << Tick(yr.lo) << "</text>\n"
      << "<text x=\"" << Num(ox) << "\" y=\"" << Num(oy + ph + 32)
      << "\" font-size=\"9\">" << Tick(xr.lo) << "</text>"
      << "<text x=\"" << Num(ox + pw) << "\" y=\"" << Num(oy + ph + 32)
      << "\" text-anchor=\"end\" font-size=\"9\">" << Tick(xr.hi) << "</text>\n";
    for (const Series& s : panels[i].series) {
      const auto color = Color(static_cast<std::size_t>(
          std::find(names.begin(), names.end(), s.name) - names.begin()));
      o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < s.points.size(); ++k) {
        o << (k ? " " : "") << Num(px(s.points[k].first)) << ',' << Num(py(s.points[k].second));
      }
      o << "\"/>\n";
    }
    o << "</g>\n";
  }
  o << "<text x=\"" << Num(kPad + columns * kPanelW / 2.0) << "\" y=\"" << height - 8
    << "\" text-anchor=\"middle\" font-size=\"12\">" << Escape(xlabel) << "</text>\n"
    << "<text x=\"14\" y=\"" << height / 2 << "\" transform=\"rotate(-90 14 " << height / 2
    << ")\" text-anchor=\"middle\" font-size=\"12\">" << Escape(ylabel) << "</text>\n";
  Legend(o, names, kPad + columns * kPanelW + 10.0, kTop + 20.0);
  o << "</svg>\n";
  return o.str();
}

std::string BarChart(const std::string& title, const std::string& ylabel,
                     const std::vector<std::string>& series_names,
                     const std::vector<BarGroup>& groups, bool log10) {
  constexpr int kLeft = 70, kTop = 40, kPlotH = 300, kBottom = 70, kLegendW = 140;
  const int bar_w = 10;
  const int group_w = static_cast<int>(series_names.size()) * bar_w + 12;
  const int plot_w = std::max(200, static_cast<int>(groups.size()) * group_w);
  const int width = kLeft + plot_w + kLegendW;
  const int height = kTop + kPlotH + kBottom;

  auto transform = [&](double v) -> std::optional<double> {
    if (!log10) return v;
    if (v <= 0) return std::nullopt;
    return std::log10(v);
  };
  Range yr;
  yr.Add(0.0);
  for (const BarGroup& g : groups) {
    for (const auto& v : g.values) {
      if (v) {
        if (auto t = transform(*v)) yr.Add(*t);
      }
    }
  }
  yr.Finish();
  auto py = [&](double y) { return kTop + kPlotH - (y - yr.lo) / (yr.hi - yr.lo) * kPlotH; };

  std::ostringstream o;
  Header(o, width, height, title);
  o << "<line x1=\"" << kLeft << "\" y1=\"" << Num(py(0)) << "\" x2=\"" << kLeft + plot_w
    << "\" y2=\"" << Num(py(0)) << "\" stroke=\"#333\"/>\n"
    << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
    << kTop + kPlotH << "\" stroke=\"#333\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    o << "<text x=\"" << kLeft - 4 << "\" y=\"" << Num(py(y) + 3)
      << "\" text-anchor=\"end\" font-size=\"10\">" << Tick(y) << "</text>\n";
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double gx = kLeft + 6.0 + static_cast<double>(g) * group_w;
    for (std::size_t s = 0; s < groups[g].values.size(); ++s) {
      const auto& v = groups[g].values[s];
      if (!v) continue;
      const auto t = transform(*v);
      if (!t) continue;
      const double top = std::min(py(*t), py(0)), bottom = std::max(py(*t), py(0));
      o << "<rect x=\"" << Num(gx + static_cast<double>(s) * bar_w) << "\" y=\"" << Num(top)
        << "\" width=\"" << bar_w - 1 << "\" height=\"" << Num(bottom - top) << "\" fill=\""
        << Color(s) << "\"><title>" << Escape(groups[g].label) << ' '
        << Escape(series_names[s]) << ": " << Tick(*v) << "</title></rect>\n";
    }
    const double cx = gx + group_w / 2.0 - 6;
    o << "<text x=\"" << Num(cx) << "\" y=\"" << kTop + kPlotH + 14 << "\" transform=\"rotate(45 "
      << Num(cx) << ' ' << kTop + kPlotH + 14 << ")\" font-size=\"10\">"
      << Escape(groups[g].label) << "</text>\n";
  }
  o << "<text x=\"14\" y=\"" << kTop + kPlotH / 2 << "\" transform=\"rotate(-90 14 "
    << kTop + kPlotH / 2 << ")\" text-anchor=\"middle\" font-size=\"12\">"
    << Escape(log10 ? "log10 " + ylabel : ylabel) << "</text>\n";
  Legend(o, series_names, kLeft + plot_w + 12.0, kTop + 10.0);
  o << "</svg>\n";
  return o.str();
}

}  // namespace qperturb::svg
