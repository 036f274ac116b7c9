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

#include <vector>

#include "pim/core.hpp"
#include "pim/modelspace.hpp"

namespace pim {

struct LivsicFunction {
  int n = 0;
  int r = 0;
  CMatrix extension;     // unitary U agreeing with A on its initial space
  CMatrix kernel_basis;  // n×r, orthonormal columns spanning ker A

  // Checks shapes, unitarity and orthonormality.
  static LivsicFunction from_parts(const CMatrix& extension, const CMatrix& kernel_basis,
                                   const ToleranceCfg& cfg = {});
};

LivsicFunction livsic_build(const CMatrix& A, const ToleranceCfg& cfg = {});

// w(z) = z·G1·G2⁻¹ with G1(i,j) = <(U − z)⁻¹ v_i, v_j> and
// G2(i,j) = <(U − z)⁻¹ U v_i, v_j>.
CMatrix livsic_eval(const LivsicFunction& L, cplx z, const ToleranceCfg& cfg = {});

// Boundary value at unimodular ζ, extrapolated from radii 1 − δ and 1 − 2δ.
CMatrix livsic_radial_limit(const LivsicFunction& L, cplx zeta,
                            const ToleranceCfg& cfg = {}, double delta = 1e-6);

// Deterministic interior sample points with radii in [0.2, 0.8].
std::vector<cplx> livsic_sample_points(int count);

BlaschkeProduct livsic_defect1(const CMatrix& A, const ToleranceCfg& cfg = {});

// Least-squares unimodular c with w(z_k) ≈ c·b(z_k), and the largest
// pointwise deviation.
struct RatioFit {
  cplx constant = 1.0;
  double deviation = 0.0;
};
RatioFit blaschke_ratio(const LivsicFunction& L, const BlaschkeProduct& b,
                        const std::vector<cplx>& points, const ToleranceCfg& cfg = {});

enum class LivsicVerdict { Equivalent, NotEquivalent, Inconclusive };

struct LivsicComparison {
  LivsicVerdict verdict = LivsicVerdict::Inconclusive;
  int defect = 0;
  // Largest sampled gap between the compared invariants.
  double gap = 0.0;
};

LivsicComparison livsic_equivalent(const CMatrix& A, const CMatrix& B,
                                   const ToleranceCfg& cfg = {});

const char* verdict_name(LivsicVerdict v);

}  // namespace pim
