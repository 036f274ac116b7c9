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

#include "pim/predicates.hpp"

#include <cmath>

namespace pim {

bool is_partial_isometry(const CMatrix& A, const ToleranceCfg& cfg) {
  require_square(A, "matrix");
  require_finite(A, "matrix");
  const RVector s = singular_values(A);
  const double one_tol = cfg.abs_tol * std::max(1.0, A.norm());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const bool zero = s(i) <= cfg.rank_rel_tol;
    const bool one = std::abs(s(i) - 1.0) <= one_tol;
    if (!zero && !one) return false;
  }
  return true;
}

void require_partial_isometry(const CMatrix& A, const ToleranceCfg& cfg,
                              const char* what) {
  if (!is_partial_isometry(A, cfg)) {
    throw Error(ErrorKind::NotPartialIsometry,
                std::string(what) + " is not a partial isometry");
  }
}

Projections projections(const CMatrix& A, const ToleranceCfg& cfg) {
  require_partial_isometry(A, cfg, "matrix");
  return Projections{A.adjoint() * A, A * A.adjoint()};
}

int defect(const CMatrix& A, const ToleranceCfg& cfg) {
  require_square(A, "matrix");
  return static_cast<int>(A.rows()) - numeric_rank(A, cfg);
}

bool on_circle(cplx z, const ToleranceCfg& cfg) {
  return std::abs(std::abs(z) - 1.0) <= cfg.unimodular_tol;
}

bool in_open_disk(cplx z, const ToleranceCfg& cfg) {
  return std::abs(z) < 1.0 - cfg.unimodular_tol;
}

PIClassification classify(const CMatrix& A, const ToleranceCfg& cfg) {
  PIClassification c;
  c.is_pi = is_partial_isometry(A, cfg);
  c.rank = numeric_rank(A, cfg);
  c.defect = static_cast<int>(A.rows()) - c.rank;
  c.pi_residual = (A * A.adjoint() * A - A).norm();
  for (const cplx& z : eigenvalues(A)) {
    if (in_open_disk(z, cfg)) {
      c.disk_spectrum.push_back(z);
    } else if (on_circle(z, cfg)) {
      c.circle_spectrum.push_back(z);
    } else {
      c.exterior_spectrum.push_back(z);
    }
  }
  c.is_unitary = c.is_pi && c.defect == 0;
  c.is_cnu = c.is_pi && c.circle_spectrum.empty();
  return c;
}

}  // namespace pim
