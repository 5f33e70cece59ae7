// Copyright 2026 The qcomplex Authors
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

#include "qcx/analysis/scaling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qcx/errors.hpp"

namespace qcx {

namespace {

struct Stencil {
  std::array<std::size_t, 3> at;
  std::array<double, 3> w;
};

Stencil stencil(const std::vector<double>& x, std::size_t i) {
  const std::size_t n = x.size();
  if (i == 0) {
    const double h1 = x[1] - x[0], h2 = x[2] - x[1];
    return {{0, 1, 2},
            {-(2 * h1 + h2) / (h1 * (h1 + h2)), (h1 + h2) / (h1 * h2), -h1 / (h2 * (h1 + h2))}};
  }
  if (i == n - 1) {
    const double h1 = x[n - 2] - x[n - 3], h2 = x[n - 1] - x[n - 2];
    return {{n - 3, n - 2, n - 1},
            {h2 / (h1 * (h1 + h2)), -(h1 + h2) / (h1 * h2), (h1 + 2 * h2) / (h2 * (h1 + h2))}};
  }
  const double h1 = x[i] - x[i - 1], h2 = x[i + 1] - x[i];
  return {{i - 1, i, i + 1},
          {-h2 / (h1 * (h1 + h2)), (h2 - h1) / (h1 * h2), h1 / (h2 * (h1 + h2))}};
}

int sign(double v) { return (v > 0) - (v < 0); }

struct Fit {
  Eigen::Vector3d coef = Eigen::Vector3d::Zero();
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  double rss = 0.0;
  int dof = 0;
  bool ok = false;
};

// Least squares over the columns flagged in `free` (a is always free).
Fit solve_subset(const Eigen::VectorXd& x, const Eigen::VectorXd& y, std::array<bool, 3> free) {
  std::vector<int> cols;
  for (int k = 0; k < 3; ++k) {
    if (free[k]) cols.push_back(k);
  }
  const Eigen::Index n = x.size();
  const auto p = static_cast<Eigen::Index>(cols.size());
  Eigen::MatrixXd design(n, p);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < p; ++c) design(r, c) = std::pow(x[r], cols[c]);
  }
  Fit fit;
  const Eigen::MatrixXd gram = design.transpose() * design;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible()) return fit;
  const Eigen::VectorXd beta = lu.solve(design.transpose() * y);
  fit.rss = (design * beta - y).squaredNorm();
  fit.dof = static_cast<int>(n - p);
  if (fit.dof > 0) {
    const Eigen::MatrixXd cov = (fit.rss / fit.dof) * lu.inverse();
    for (Eigen::Index r = 0; r < p; ++r) {
      for (Eigen::Index c = 0; c < p; ++c) fit.cov(cols[r], cols[c]) = cov(r, c);
    }
  }
  for (Eigen::Index c = 0; c < p; ++c) fit.coef[cols[c]] = beta[c];
  fit.ok = true;
  return fit;
}

bool feasible(const Fit& fit, Branch branch) {
  if (branch == Branch::UNCONSTRAINED) return true;
  const double s = branch == Branch::FIRST ? 1.0 : -1.0;
  return s * fit.coef[1] <= 0.0 && s * fit.coef[2] <= 0.0;
}

std::vector<int> filter_sizes(std::span<const int> sizes, bool even_only) {
  std::vector<int> out;
  for (int n : sizes) {
    if (!even_only || n % 2 == 0) out.push_back(n);
  }
  return out;
}

}  // namespace

SweepCurve derivative_curve(const SweepCurve& curve) {
  curve.validate();
  const std::size_t n = curve.grid.size();
  if (n < 3) throw ArgumentError("derivative needs at least 3 grid points");
  SweepCurve d = curve;
  for (std::size_t i = 0; i < n; ++i) {
    const Stencil s = stencil(curve.grid, i);
    double v = 0.0, var = 0.0;
    for (int k = 0; k < 3; ++k) {
      v += s.w[k] * curve.mean[s.at[k]];
      const double e = s.w[k] * curve.std_error[s.at[k]];
      var += e * e;
    }
    d.mean[i] = v;
    d.std_error[i] = std::sqrt(var);
  }
  return d;
}

std::vector<double> crossing_points(const SweepCurve& a, const SweepCurve& b) {
  if (a.grid != b.grid) throw ArgumentError("crossing_points needs identical grids");
  if (a.mean.size() != a.grid.size() || b.mean.size() != b.grid.size()) {
    throw ArgumentError("curve lengths do not match their grids");
  }
  const auto& x = a.grid;
  std::vector<double> out;
  std::size_t last = x.size();  // index of the previous nonzero difference
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double dj = a.mean[j] - b.mean[j];
    if (sign(dj) == 0) continue;
    if (last != x.size()) {
      const double dk = a.mean[last] - b.mean[last];
      if (sign(dk) != sign(dj)) {
        if (j == last + 1) {
          out.push_back(x[last] + (x[j] - x[last]) * dk / (dk - dj));
        } else {
          out.push_back(0.5 * (x[last + 1] + x[j - 1]));
        }
      }
    }
    last = j;
  }
  return out;
}

double extremum_location(const SweepCurve& curve) {
  const auto& x = curve.grid;
  const auto& f = curve.mean;
  if (x.empty() || f.size() != x.size()) throw ArgumentError("extremum of an empty curve");
  std::size_t i = 0;
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (std::abs(f[k]) > std::abs(f[i])) i = k;
  }
  if (i == 0 || i + 1 == x.size()) return x[i];
  const double f01 = (f[i] - f[i - 1]) / (x[i] - x[i - 1]);
  const double f12 = (f[i + 1] - f[i]) / (x[i + 1] - x[i]);
  const double f012 = (f12 - f01) / (x[i + 1] - x[i - 1]);
  if (f012 == 0.0) return x[i];
  const double v = 0.5 * (x[i - 1] + x[i]) - f01 / (2.0 * f012);
  return std::clamp(v, x[i - 1], x[i + 1]);
}

BracketedCrossings bracket_crossings(std::span<const double> crossings, double extremum) {
  BracketedCrossings out;
  for (double c : crossings) {
    if (c < extremum) {
      if (out.first) out.discarded.push_back(*out.first);
      out.first = c;
    } else if (!out.second) {
      out.second = c;
    } else {
      out.discarded.push_back(c);
    }
  }
  std::sort(out.discarded.begin(), out.discarded.end());
  return out;
}

std::string to_string(Branch branch) {
  switch (branch) {
    case Branch::FIRST: return "FIRST";
    case Branch::SECOND: return "SECOND";
    case Branch::UNCONSTRAINED: return "UNCONSTRAINED";
  }
  return "?";
}

ScalingResult extrapolate_transition(std::span<const Crossing> crossings, Branch branch,
                                     MarkerId marker) {
  if (crossings.size() < 2) {
    throw InsufficientDataError("extrapolation needs at least 2 crossings, got " +
                                std::to_string(crossings.size()));
  }
  const auto n = static_cast<Eigen::Index>(crossings.size());
  Eigen::VectorXd x(n), y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Crossing& c = crossings[static_cast<std::size_t>(i)];
    if (c.n1 <= 0 || c.n2 <= 0) throw ArgumentError("crossing sizes must be positive");
    if (!std::isfinite(c.location)) throw ArgumentError("crossing location is not finite");
    x[i] = 1.0 / std::sqrt(static_cast<double>(c.n1) * static_cast<double>(c.n2));
    y[i] = c.location;
  }
  const bool pinned = crossings.size() == 2;
  std::vector<std::array<bool, 3>> sets;
  if (!pinned) sets.push_back({true, true, true});
  sets.push_back({true, true, false});
  if (!pinned) sets.push_back({true, false, true});
  sets.push_back({true, false, false});

  Fit best;
  std::array<bool, 3> best_set{};
  for (const auto& s : sets) {
    const Fit f = solve_subset(x, y, s);
    if (!f.ok || !feasible(f, branch)) continue;
    // Unconstrained fits take the richest solvable model; constrained ones the least residual.
    if (branch == Branch::UNCONSTRAINED) {
      best = f;
      best_set = s;
      break;
    }
    if (!best.ok || f.rss < best.rss) {
      best = f;
      best_set = s;
    }
  }
  if (!best.ok) throw InsufficientDataError("crossing sizes are degenerate; no fit possible");

  ScalingResult r;
  r.marker = marker;
  r.branch = branch;
  r.crossings.assign(crossings.begin(), crossings.end());
  r.a = best.coef[0];
  r.b = best.coef[1];
  r.c = best.coef[2];
  r.covariance = best.cov;
  r.transition = r.a;
  r.c_pinned = pinned;
  r.b_clamped = !best_set[1];
  r.c_clamped = !pinned && !best_set[2];
  r.rss = best.rss;
  if (!pinned && best.dof > 0) r.uncertainty = std::sqrt(std::max(0.0, best.cov(0, 0)));
  return r;
}

std::vector<PairCrossings> consecutive_crossings(const std::map<int, SweepCurve>& derivatives,
                                                 std::span<const int> sizes) {
  std::vector<PairCrossings> out;
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    const SweepCurve& lo = derivatives.at(sizes[i - 1]);
    const SweepCurve& hi = derivatives.at(sizes[i]);
    PairCrossings p;
    p.n1 = sizes[i - 1];
    p.n2 = sizes[i];
    p.all = crossing_points(lo, hi);
    p.kept = bracket_crossings(p.all, extremum_location(hi));
    out.push_back(std::move(p));
  }
  return out;
}

TransitionEstimate estimate_transitions(const std::map<int, SweepCurve>& curves,
                                        const TransitionOptions& options) {
  TransitionEstimate est;
  if (curves.empty()) throw InsufficientDataError("no curves to analyse");
  est.marker = curves.begin()->second.marker;
  std::map<int, SweepCurve> deriv;
  std::vector<int> sizes;
  for (const auto& [n, c] : curves) {
    deriv.emplace(n, derivative_curve(c));
    sizes.push_back(n);
  }
  const auto run = [&](bool even_only, Branch branch, std::vector<PairCrossings>& pairs,
                       std::optional<ScalingResult>& result) {
    pairs = consecutive_crossings(deriv, filter_sizes(sizes, even_only));
    std::vector<Crossing> pts;
    for (const PairCrossings& p : pairs) {
      const auto& kept = branch == Branch::FIRST ? p.kept.first : p.kept.second;
      if (kept) {
        pts.push_back({p.n1, p.n2, *kept});
      } else {
        est.notes.push_back(to_string(branch) + ": no crossing for N=" + std::to_string(p.n1) +
                            "/" + std::to_string(p.n2));
      }
      for (double d : p.kept.discarded) {
        if (branch == Branch::FIRST) {
          est.notes.push_back("discarded crossing " + std::to_string(d) + " for N=" +
                              std::to_string(p.n1) + "/" + std::to_string(p.n2));
        }
      }
    }
    if (pts.size() >= 2) {
      result = extrapolate_transition(pts, branch, est.marker);
    } else {
      est.notes.push_back(to_string(branch) + ": fewer than 2 crossings, no extrapolation");
    }
  };
  run(options.first_even_only, Branch::FIRST, est.pairs_first, est.first);
  run(options.second_even_only, Branch::SECOND, est.pairs_second, est.second);
  return est;
}

ScalingResult extremum_transition(const std::map<int, SweepCurve>& curves) {
  std::vector<Crossing> pts;
  MarkerId marker = MarkerId::D2;
  for (const auto& [n, c] : curves) {
    marker = c.marker;
    pts.push_back({n, n, extremum_location(derivative_curve(c))});
  }
  return extrapolate_transition(pts, Branch::UNCONSTRAINED, marker);
}

}  // namespace qcx
