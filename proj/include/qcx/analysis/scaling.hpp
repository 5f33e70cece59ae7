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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcx/analysis/sweep.hpp"

namespace qcx {

/// First derivative on a possibly non-uniform grid: three-point central
/// formula inside, three-point one-sided formulas at the ends (all exact for
/// quadratics). Errors propagate as sqrt(sum_k w_k^2 se_k^2), treating grid
/// points as independent.
SweepCurve derivative_curve(const SweepCurve& curve);

/// Locations where curve a - curve b changes sign, linearly interpolated,
/// ascending. A run of exact zeros between opposite signs counts once at its
/// midpoint; touching without a sign change is not a crossing.
std::vector<double> crossing_points(const SweepCurve& a, const SweepCurve& b);

/// Grid location of the largest |mean|, refined by a parabola through the
/// neighbouring points.
double extremum_location(const SweepCurve& curve);

struct BracketedCrossings {
  std::optional<double> first;   // nearest crossing below the extremum
  std::optional<double> second;  // nearest crossing above it
  std::vector<double> discarded;
};

/// Keeps the two crossings that bracket `extremum`.
BracketedCrossings bracket_crossings(std::span<const double> crossings, double extremum);

enum class Branch { FIRST, SECOND, UNCONSTRAINED };

std::string to_string(Branch branch);

struct Crossing {
  int n1 = 0;
  int n2 = 0;
  double location = 0.0;
};

struct ScalingResult {
  MarkerId marker = MarkerId::D2;
  Branch branch = Branch::FIRST;
  std::vector<Crossing> crossings;
  /// location = a + b x + c x^2 with x = 1 / sqrt(N1 N2).
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  /// Covariance of (a, b, c); rows and columns of clamped coefficients are 0.
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
  double transition = 0.0;
  /// sqrt(covariance(0, 0)); absent when the fit has no residual degrees of
  /// freedom.
  std::optional<double> uncertainty;
  bool b_clamped = false;
  bool c_clamped = false;
  /// c fixed to 0 because only two crossings were available.
  bool c_pinned = false;
  double rss = 0.0;
};

/// Least squares of location against 1/sqrt(N1 N2) under the branch's sign
/// constraints (FIRST: b, c <= 0; SECOND: b, c >= 0). Every active set
/// {a,b,c}, {a,b}, {a,c}, {a} is solved and the feasible one with the least
/// residual wins. Two crossings fit a line; fewer throw InsufficientDataError.
ScalingResult extrapolate_transition(std::span<const Crossing> crossings, Branch branch,
                                     MarkerId marker = MarkerId::D2);

/// Crossings of consecutive sizes in `sizes` (ascending), keeping the pair
/// bracketing the extremum of the larger size's derivative.
struct PairCrossings {
  int n1 = 0;
  int n2 = 0;
  std::vector<double> all;
  BracketedCrossings kept;
};

/// Derivative crossings for consecutive sizes of one marker.
std::vector<PairCrossings> consecutive_crossings(const std::map<int, SweepCurve>& derivatives,
                                                 std::span<const int> sizes);

struct TransitionEstimate {
  MarkerId marker = MarkerId::D2;
  std::vector<PairCrossings> pairs_first;
  std::vector<PairCrossings> pairs_second;
  std::optional<ScalingResult> first;
  std::optional<ScalingResult> second;
  std::vector<std::string> notes;
};

struct TransitionOptions {
  /// Use only even sizes for the first transition, all sizes for the second.
  bool first_even_only = true;
  bool second_even_only = false;
};

/// Full pipeline for one marker of a bulk sweep: derivatives, consecutive-size
/// crossings, bracketing and constrained extrapolation for both transitions.
TransitionEstimate estimate_transitions(const std::map<int, SweepCurve>& curves,
                                        const TransitionOptions& options = {});

/// Ground-state variant: the extremum of each size's derivative, extrapolated
/// against 1/N with an unconstrained quadratic.
ScalingResult extremum_transition(const std::map<int, SweepCurve>& curves);

}  // namespace qcx
