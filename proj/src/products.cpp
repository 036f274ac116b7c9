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

#include "pim/products.hpp"

#include "pim/factor.hpp"
#include "pim/predicates.hpp"

namespace pim {

ProductVerdict product_is_pi(const CMatrix& A, const CMatrix& B,
                             const ToleranceCfg& cfg) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "factors differ in size");
  }
  require_partial_isometry(A, cfg, "first factor");
  require_partial_isometry(B, cfg, "second factor");
  const CMatrix P = A.adjoint() * A;
  const CMatrix Q = B * B.adjoint();
  ProductVerdict v;
  v.commutator_norm = (P * Q - Q * P).norm();
  v.verdict = v.commutator_norm <= cfg.abs_tol * std::max(1.0, P.norm() * Q.norm());
  return v;
}

bool chain_is_pi(const std::vector<CMatrix>& As, const ToleranceCfg& cfg) {
  if (As.empty()) throw Error(ErrorKind::InvalidInput, "empty product");
  for (const CMatrix& M : As) {
    if (M.rows() != As[0].rows() || M.cols() != As[0].cols()) {
      throw Error(ErrorKind::ShapeMismatch, "factors differ in size");
    }
    require_partial_isometry(M, cfg, "factor");
  }
  CMatrix prod = As[0];
  for (std::size_t i = 1; i < As.size(); ++i) prod = prod * As[i];
  CMatrix rev = As.back().adjoint();
  for (std::size_t i = As.size() - 1; i-- > 0;) rev = rev * As[i].adjoint();
  return approx_eq(pseudoinverse(prod, cfg), rev, cfg);
}

std::optional<int> min_pi_factors(const CMatrix& A, const ToleranceCfg& cfg) {
  require_square(A, "matrix");
  const double nrm = spectral_norm(A);
  if (nrm > 1.0 + cfg.abs_tol * std::max(1.0, A.norm())) {
    throw Error(ErrorKind::NotContraction, "matrix norm exceeds 1");
  }
  const Eigen::Index n = A.rows();
  const int dk = defect(A, cfg);
  if (dk == 0) {
    if (is_partial_isometry(A, cfg)) return 1;
    return std::nullopt;
  }
  const CMatrix D = identity(n) - A.adjoint() * A;
  const int rk = rank_above(D, cfg.rank_rel_tol);
  const int k = (rk + dk - 1) / dk;
  return std::max(1, k);
}

CMatrix kronecker(const CMatrix& A, const CMatrix& B) {
  CMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return K;
}

}  // namespace pim
