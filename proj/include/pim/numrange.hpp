// Copyright 2026 The pimat Authors
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

#pragma once

#include <optional>
#include <vector>

#include "pim/core.hpp"
#include "pim/modelspace.hpp"

namespace pim {

struct NRSample {
  double theta = 0.0;
  double support = 0.0;
  cplx boundary;
};

struct NRRegion {
  std::vector<NRSample> samples;
  std::optional<std::vector<cplx>> vertices;  // counterclockwise
};

NRRegion nr_sweep(const CMatrix& A, int m);
NRRegion nr_normal_hull(const CMatrix& A, const ToleranceCfg& cfg = {}, int m = 360);
std::vector<cplx> nr_polygon_Q(const ModelParams& p, cplx xi, const ToleranceCfg& cfg = {});
NRRegion nr_intersection(const ModelParams& p, int m, const ToleranceCfg& cfg = {});
bool nr_equal(const CMatrix& A, const CMatrix& B, int m, const ToleranceCfg& cfg = {});

// Support function of the region at angle θ: vertices when present,
// otherwise the hull of the sampled boundary points.
double support_at(const NRRegion& region, double theta);
// Hausdorff distance of the two convex regions, as the largest support gap
// over a uniform grid of angles.
double nr_hausdorff(const NRRegion& a, const NRRegion& b, int grid = 4096);
// Largest violation of h(θ−δ) + h(θ+δ) ≥ 2 cos δ · h(θ) over adjacent
// samples; nonpositive for a convex region.
double convexity_defect(const NRRegion& region);

// Counterclockwise hull; collinear points dropped.
std::vector<cplx> convex_hull(std::vector<cplx> points, double tol = 1e-12);
bool point_in_polygon(const std::vector<cplx>& polygon, cplx z, double slack);
// RMS of first-order geometric distances to the best algebraic conic.
double conic_fit_residual(const std::vector<cplx>& points);
std::vector<cplx> boundary_points(const NRRegion& region);

}  // namespace pim
