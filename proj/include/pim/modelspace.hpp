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

namespace pim {

// z^m · ∏ (z − λ_j) / (1 − conj(λ_j) z), every |λ_j| < 1.
struct BlaschkeProduct {
  int zero_order = 0;
  std::vector<cplx> zeros;

  int degree() const { return zero_order + static_cast<int>(zeros.size()); }
  void validate() const;
};

// Parameters (λ_1, ..., λ_{n-1}) of an n-dimensional model space.
struct ModelParams {
  std::vector<cplx> lambdas;

  int size() const { return static_cast<int>(lambdas.size()) + 1; }
  void validate(const ToleranceCfg& cfg = {}) const;
};

// B(z) = z ∏ (z − λ_j)/(1 − conj(λ_j) z).
BlaschkeProduct model_blaschke(const ModelParams& p);
// b(z) = z² ∏ (z − λ_j)/(1 − conj(λ_j) z).
BlaschkeProduct range_blaschke(const ModelParams& p);

cplx blaschke_eval(const BlaschkeProduct& b, cplx z);

// Solutions of b(z) = ξ, all on the unit circle, sorted by argument in
// [0, 2π).
std::vector<cplx> blaschke_preimages(const BlaschkeProduct& b, cplx xi,
                                     const ToleranceCfg& cfg = {});

// Takenaka basis function v_i, 0-based index i in [0, n).
cplx takenaka_eval(const ModelParams& p, int i, cplx z);

CMatrix model_matrix(const ModelParams& p);

// Reproducing kernel k_λ(z) of the model space.
cplx kernel_eval(const ModelParams& p, cplx lam, cplx z);

// Nodes of the uniform trapezoid rule on the unit circle.
std::vector<cplx> circle_nodes(int count);

}  // namespace pim
