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

#include "pim/core.hpp"

namespace pim {

// A = U X_r V* with X_r = I_r ⊕ 0.
struct SvdCanonical {
  CMatrix U;
  int r = 0;
  CMatrix V;
};

// Q* A Q = [N | 0], N of size n×r with orthonormal columns.
struct Compression {
  CMatrix Q;
  CMatrix N;
};

// N split as [B; C] with B of size r×r.
struct BlockForm {
  CMatrix B;
  CMatrix C;
};

// A = W P = Q W.
struct PolarFactors {
  CMatrix W;
  CMatrix P;
  CMatrix Q;
};

// A = E R with E a partial isometry, R = |A|, ker E = ker R.
struct PiPolar {
  CMatrix E;
  CMatrix R;
};

CMatrix x_r(Eigen::Index n, int r);

SvdCanonical svd_canonical(const CMatrix& A, const ToleranceCfg& cfg = {});
Compression compress_to_N(const CMatrix& A, const ToleranceCfg& cfg = {});
BlockForm block_form(const CMatrix& A, const ToleranceCfg& cfg = {});
PolarFactors polar_factor(const CMatrix& A, const ToleranceCfg& cfg = {});
CMatrix unitary_extension(const CMatrix& A, const ToleranceCfg& cfg = {});
PiPolar pi_polar(const CMatrix& A, const ToleranceCfg& cfg = {});
CMatrix pseudoinverse(const CMatrix& A, const ToleranceCfg& cfg = {});
bool is_pi_via_pseudoinverse(const CMatrix& A, const ToleranceCfg& cfg = {});

}  // namespace pim
