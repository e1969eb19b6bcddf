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

#ifndef MIRBENCH_SVG_PLOT_H
#define MIRBENCH_SVG_PLOT_H

#include <span>
#include <string>
#include <vector>

#include "mirbench/fit.h"
#include "mirbench/frame_potential.h"
#include "mirbench/scatter.h"

namespace mirbench {

struct PlotPoint {
  double x = 0.0;
  double y = 0.0;
  /// Half-height of the error bar; 0 draws none.
  double error = 0.0;
};

struct PlotSeries {
  std::string label;
  std::string color = "#1f77b4";
  std::vector<PlotPoint> points;
  /// Polyline through the points instead of markers.
  bool line = false;
};

/// Minimal static plot: linear axes with ticks, markers, error bars and lines.
struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;

  std::string render() const;
};

/// Mean survival with standard errors and the fitted curve.
SvgPlot decay_plot(const FitResult& fit);

/// Phi_2 against L for each qubit count, with the 2-design value.
SvgPlot frame_potential_plot(std::span<const FramePotentialEstimate> estimates);

/// u_est against p with the closed-form u_true line.
SvgPlot scatter_plot(std::span<const ScatterRow> rows, std::size_t n_qubits);

}  // namespace mirbench

#endif  // MIRBENCH_SVG_PLOT_H
