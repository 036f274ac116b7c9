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

struct PIClassification {
  bool is_pi = false;
  int rank = 0;
  int defect = 0;
  bool is_unitary = false;
  bool is_cnu = false;
  std::vector<cplx> disk_spectrum;
  std::vector<cplx> circle_spectrum;
  // Eigenvalues with |λ| > 1 + unimodular_tol; empty for every PI.
  std::vector<cplx> exterior_spectrum;
  // ‖AA*A − A‖_F, a consistency check for the singular-value verdict.
  double pi_residual = 0.0;
};

struct Projections {
  CMatrix initial;  // A*A, onto (ker A)^⊥
  CMatrix final;    // AA*, onto ran A
};

bool is_partial_isometry(const CMatrix& A, const ToleranceCfg& cfg = {});
void require_partial_isometry(const CMatrix& A, const ToleranceCfg& cfg,
                              const char* what);

Projections projections(const CMatrix& A, const ToleranceCfg& cfg = {});
int defect(const CMatrix& A, const ToleranceCfg& cfg = {});
PIClassification classify(const CMatrix& A, const ToleranceCfg& cfg = {});

bool on_circle(cplx z, const ToleranceCfg& cfg);
bool in_open_disk(cplx z, const ToleranceCfg& cfg);

}  // namespace pim
