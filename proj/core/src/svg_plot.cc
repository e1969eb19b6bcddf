// Copyright 2026 The mirbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mirbench/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "mirbench/channels.h"

namespace mirbench {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 55;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Tick step from {1, 2, 5} x 10^k giving about five ticks.
double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string SvgPlot::render() const {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const PlotSeries& s : series) {
    for (const PlotPoint& p : s.points) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y - p.error);
      y1 = std::max(y1, p.y + p.error);
    }
  }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
  const double ypad = 0.05 * (y1 - y0);
  y0 -= ypad;
  y1 += ypad;

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
    << "</text>\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = nice_step(x1 - x0), ys = nice_step(y1 - y0);
  for (double t = std::ceil(x0 / xs) * xs; t <= x1 + 1e-9 * xs; t += xs) {
    o << "<line x1=\"" << fmt(sx(t)) << "\" y1=\"" << kTop + ph << "\" x2=\"" << fmt(sx(t)) << "\" y2=\""
      << kTop + ph + 5 << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt(sx(t)) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">"
      << fmt(std::abs(t) < 1e-12 * xs ? 0.0 : t) << "</text>\n";
  }
  for (double t = std::ceil(y0 / ys) * ys; t <= y1 + 1e-9 * ys; t += ys) {
    o << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt(sy(t)) << "\" x2=\"" << kLeft << "\" y2=\""
      << fmt(sy(t)) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(sy(t) + 4) << "\" text-anchor=\"end\">"
      << fmt(std::abs(t) < 1e-12 * ys ? 0.0 : t) << "</text>\n";
  }
  o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
    << escape(x_label) << "</text>\n";
  o << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << kTop + ph / 2 << ")\">" << escape(y_label) << "</text>\n";

  double legend_y = kTop + 16;
  for (const PlotSeries& s : series) {
    if (s.line) {
      o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
      for (const PlotPoint& p : s.points) o << fmt(sx(p.x)) << ',' << fmt(sy(p.y)) << ' ';
      o << "\"/>\n";
    } else {
      for (const PlotPoint& p : s.points) {
        if (p.error > 0) {
          o << "<line x1=\"" << fmt(sx(p.x)) << "\" y1=\"" << fmt(sy(p.y - p.error)) << "\" x2=\"" << fmt(sx(p.x))
            << "\" y2=\"" << fmt(sy(p.y + p.error)) << "\" stroke=\"" << s.color << "\"/>\n";
        }
        o << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\"3\" fill=\"" << s.color
          << "\"/>\n";
      }
    }
    if (!s.label.empty()) {
      o << "<rect x=\"" << kLeft + pw - 150 << "\" y=\"" << legend_y - 9 << "\" width=\"10\" height=\"10\" fill=\""
        << s.color << "\"/>\n";
      o << "<text x=\"" << kLeft + pw - 135 << "\" y=\"" << legend_y << "\">" << escape(s.label) << "</text>\n";
      legend_y += 16;
    }
  }
  o << "</svg>\n";
  return o.str();
}

SvgPlot decay_plot(const FitResult& fit) {
  SvgPlot plot;
  plot.title = "Mirror decay, n = " + std::to_string(fit.n_qubits) + ", u = " + fmt(fit.u);
  plot.x_label = "sequence length L";
  plot.y_label = "survival probability";
  PlotSeries data{"mean survival", kPalette[0], {}, false};
  for (const DecayPoint& p : fit.points) data.points.push_back({p.length, p.mean, p.std_error});
  PlotSeries model{"A u^(L-1) + 1/2^n", kPalette[1], {}, true};
  if (!fit.points.empty()) {
    double lo = fit.points.front().length, hi = lo;
    for (const DecayPoint& p : fit.points) lo = std::min(lo, p.length), hi = std::max(hi, p.length);
    for (int k = 0; k <= 100; ++k) {
      const double l = lo + (hi - lo) * k / 100.0;
      model.points.push_back({l, fit.model(l), 0.0});
    }
  }
  plot.series = {data, model};
  return plot;
}

SvgPlot frame_potential_plot(std::span<const FramePotentialEstimate> estimates) {
  SvgPlot plot;
  plot.title = "Second frame potential of layer products";
  plot.x_label = "sequence length L";
  plot.y_label = "Phi_2";
  std::map<std::size_t, PlotSeries> by_n;
  double lo = INFINITY, hi = -INFINITY;
  for (const FramePotentialEstimate& e : estimates) {
    PlotSeries& s = by_n[e.n_qubits];
    s.label = "n = " + std::to_string(e.n_qubits);
    s.points.push_back({static_cast<double>(e.length), e.phi2, e.std_error});
    lo = std::min(lo, static_cast<double>(e.length));
    hi = std::max(hi, static_cast<double>(e.length));
  }
  std::size_t k = 0;
  for (auto& [n, s] : by_n) {
    s.color = kPalette[k++ % std::size(kPalette)];
    plot.series.push_back(s);
  }
  if (std::isfinite(lo)) plot.series.push_back({"2-design", "#7f7f7f", {{lo, 2.0, 0.0}, {hi, 2.0, 0.0}}, true});
  return plot;
}

SvgPlot scatter_plot(std::span<const ScatterRow> rows, std::size_t n_qubits) {
  SvgPlot plot;
  plot.title = "Estimated unitarity, n = " + std::to_string(n_qubits);
  plot.x_label = "depolarizing p";
  plot.y_label = "unitarity";
  PlotSeries est{"u_est", kPalette[0], {}, false};
  double p_hi = 0.0;
  for (const ScatterRow& r : rows) {
    est.points.push_back({r.p, r.u_est, 0.0});
    p_hi = std::max(p_hi, r.p);
  }
  PlotSeries truth{"u_true", kPalette[1], {}, true};
  const int pairs = static_cast<int>(std::max<std::size_t>(1, n_qubits / 2));
  for (int k = 0; k <= 100; ++k) {
    const double p = p_hi * k / 100.0;
    truth.points.push_back({p, depolarizing_tensor_unitarity(p, pairs), 0.0});
  }
  plot.series = {est, truth};
  return plot;
}

}  // namespace mirbench
