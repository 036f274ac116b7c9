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

#include "pim/factor.hpp"

#include "pim/predicates.hpp"

namespace pim {

CMatrix x_r(Eigen::Index n, int r) {
  CMatrix X = CMatrix::Zero(n, n);
  for (int i = 0; i < r; ++i) X(i, i) = 1.0;
  return X;
}

SvdCanonical svd_canonical(const CMatrix& A, const ToleranceCfg& cfg) {
  require_partial_isometry(A, cfg, "matrix");
  const Svd d = svd(A);
  return SvdCanonical{d.U, numeric_rank(A, cfg), d.V};
}

Compression compress_to_N(const CMatrix& A, const ToleranceCfg& cfg) {
  const SvdCanonical c = svd_canonical(A, cfg);
  // V* A V = V* U X_r, whose last n − r columns vanish.
  return Compression{c.V, c.V.adjoint() * c.U.leftCols(c.r)};
}

BlockForm block_form(const CMatrix& A, const ToleranceCfg& cfg) {
  const Compression c = compress_to_N(A, cfg);
  const Eigen::Index r = c.N.cols();
  return BlockForm{c.N.topRows(r), c.N.bottomRows(c.N.rows() - r)};
}

PolarFactors polar_factor(const CMatrix& A, const ToleranceCfg& cfg) {
  const SvdCanonical c = svd_canonical(A, cfg);
  const CMatrix W = c.U * c.V.adjoint();
  const CMatrix P = c.V * x_r(A.rows(), c.r) * c.V.adjoint();
  return PolarFactors{W, P, W * P * W.adjoint()};
}

CMatrix unitary_extension(const CMatrix& A, const ToleranceCfg& cfg) {
  return polar_factor(A, cfg).W;
}

PiPolar pi_polar(const CMatrix& A, const ToleranceCfg& cfg) {
  require_square(A, "matrix");
  const Svd d = svd(A);
  const int r = numeric_rank(A, cfg);
  const CMatrix E = d.U * x_r(A.rows(), r) * d.V.adjoint();
  const CMatrix R = d.V * d.sigmas.cast<cplx>().asDiagonal() * d.V.adjoint();
  return PiPolar{E, R};
}

CMatrix pseudoinverse(const CMatrix& A, const ToleranceCfg& cfg) {
  require_square(A, "matrix");
  const Svd d = svd(A);
  const int r = numeric_rank(A, cfg);
  CMatrix S = CMatrix::Zero(A.rows(), A.cols());
  // Rounding noise from a product that vanishes is not inverted.
  for (int i = 0; i < r; ++i) {
    if (d.sigmas(i) > cfg.abs_tol) S(i, i) = 1.0 / d.sigmas(i);
  }
  return d.V * S * d.U.adjoint();
}

bool is_pi_via_pseudoinverse(const CMatrix& A, const ToleranceCfg& cfg) {
  return approx_eq(pseudoinverse(A, cfg), A.adjoint(), cfg);
}

}  // namespace pim
