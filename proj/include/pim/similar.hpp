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

struct JordanGroup {
  cplx eig;
  std::vector<int> sizes;  // descending
};

struct JordanData {
  std::vector<JordanGroup> groups;

  int size() const;
  int block_count(cplx eig, double tol) const;
  // Sorts sizes descending and groups by eigenvalue (zero first, then by
  // modulus and argument); throws InvalidInput on empty or duplicate data.
  void normalize(double tol);
};

bool jordan_equal(const JordanData& a, const JordanData& b, double eig_tol);

JordanData jordan_of(const CMatrix& A, const ToleranceCfg& cfg = {});
bool similar_to_pi(const JordanData& J, const ToleranceCfg& cfg = {});
CMatrix realize_similar_pi(const JordanData& J, const ToleranceCfg& cfg = {});

}  // namespace pim
