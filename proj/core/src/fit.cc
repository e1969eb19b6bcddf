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

#include "mirbench/fit.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>

namespace mirbench {

namespace {

constexpr int kGridSize = 2001;

struct WeightedData {
  std::vector<double> length;
  std::vector<double> y;
  std::vector<double> sqrt_w;
  double b = 0.0;
};

double power(double u, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::pow(u, exponent);
}

// Optimal A for fixed u.
double solve_a(const WeightedData& d, double u) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < d.y.size(); ++k) {
    const double g = power(u, d.length[k] - 1.0);
    const double w = d.sqrt_w[k] * d.sqrt_w[k];
    num += w * g * (d.y[k] - d.b);
    den += w * g * g;
  }
  return den > 0.0 ? num / den : 0.0;
}

double sse(const WeightedData& d, double a, double u) {
  double acc = 0.0;
  for (std::size_t k = 0; k < d.y.size(); ++k) {
    const double r = d.sqrt_w[k] * (a * power(u, d.length[k] - 1.0) + d.b - d.y[k]);
    acc += r * r;
  }
  return acc;
}

struct DecayFunctor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  const WeightedData* data;

  int inputs() const { return 2; }
  int values() const { return static_cast<int>(data->y.size()); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const {
    for (int k = 0; k < values(); ++k) {
      fvec(k) = data->sqrt_w[k] * (x(0) * power(x(1), data->length[k] - 1.0) + data->b - data->y[k]);
    }
    return 0;
  }

  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& fjac) const {
    for (int k = 0; k < values(); ++k) {
      const double e = data->length[k] - 1.0;
      fjac(k, 0) = data->sqrt_w[k] * power(x(1), e);
      fjac(k, 1) = e == 0.0 ? 0.0 : data->sqrt_w[k] * x(0) * e * power(x(1), e - 1.0);
    }
    return 0;
  }
};

}  // namespace

double FitResult::model(double length) const { return a * power(u, length - 1.0) + b; }

std::vector<DecayPoint> decay_points(const DecayDataset& data) {
  std::vector<DecayPoint> points;
  for (std::size_t length : data.lengths()) {
    double rate_sum = 0.0;
    std::uint64_t shots = 0, successes = 0;
    std::size_t circuits = 0;
    for (const DatasetEntry& e : data.entries) {
      if (e.length != length) continue;
      rate_sum += e.rate();
      shots += e.shots;
      successes += e.successes;
      ++circuits;
    }
    const double pooled = static_cast<double>(successes) / static_cast<double>(shots);
    points.push_back({static_cast<double>(length), rate_sum / static_cast<double>(circuits),
                      std::sqrt(pooled * (1.0 - pooled) / static_cast<double>(shots))});
  }
  return points;
}

FitResult fit_decay_curve(std::span<const DecayPoint> points, std::size_t n_qubits) {
  std::set<double> distinct;
  for (const DecayPoint& p : points) distinct.insert(p.length);
  if (distinct.size() < 2) throw std::invalid_argument("fit: need at least two distinct sequence lengths");
  if (n_qubits == 0 || n_qubits > 64) throw std::invalid_argument("fit: bad qubit count");

  WeightedData d;
  d.b = std::ldexp(1.0, -static_cast<int>(n_qubits));
  for (const DecayPoint& p : points) {
    d.length.push_back(p.length);
    d.y.push_back(p.mean);
    d.sqrt_w.push_back(1.0 / std::max(p.std_error, kStdErrorFloor));
  }

  FitResult out;
  out.n_qubits = n_qubits;
  out.b = d.b;
  out.points.assign(points.begin(), points.end());

  const auto [lo, hi] = std::minmax_element(d.y.begin(), d.y.end());
  if (*hi - *lo <= 1e-12) {
    out.degenerate = true;
    out.u = 1.0;
    out.a = d.y.front() - d.b;
  } else {
    double best_u = 0.0, best_sse = INFINITY;
    for (int g = 0; g < kGridSize; ++g) {
      const double u = static_cast<double>(g) / (kGridSize - 1);
      const double s = sse(d, solve_a(d, u), u);
      if (s < best_sse) {
        best_sse = s;
        best_u = u;
      }
    }

    DecayFunctor functor{&d};
    Eigen::LevenbergMarquardt<DecayFunctor> lm(functor);
    lm.parameters.ftol = 1e-15;
    lm.parameters.xtol = 1e-15;
    lm.parameters.maxfev = 2000;
    Eigen::VectorXd x(2);
    x << solve_a(d, best_u), best_u;
    lm.minimize(x);

    double u = std::isfinite(x(1)) ? std::clamp(x(1), 0.0, 1.0) : best_u;
    if (sse(d, solve_a(d, u), u) > best_sse) u = best_u;
    out.u = u;
    out.a = solve_a(d, u);
  }
  out.residual_norm = std::sqrt(sse(d, out.a, out.u));
  out.ci_low = out.u;
  out.ci_high = out.u;
  return out;
}

FitResult fit_decay(const DecayDataset& data) {
  validate(data);
  const std::vector<DecayPoint> points = decay_points(data);
  return fit_decay_curve(points, data.n_qubits);
}

}  // namespace mirbench
