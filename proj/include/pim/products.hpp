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

namespace pim {

struct ProductVerdict {
  bool verdict = false;
  double commutator_norm = 0.0;
};

// AB is a partial isometry iff A*A and BB* commute.
ProductVerdict product_is_pi(const CMatrix& A, const CMatrix& B,
                             const ToleranceCfg& cfg = {});

// Compares pinv(A1⋯Ak) with Ak*⋯A1*.
bool chain_is_pi(const std::vector<CMatrix>& As, const ToleranceCfg& cfg = {});

// Least k with rank(I − A*A) ≤ k·dim ker A; nullopt for nonsingular
// non-unitary contractions.
std::optional<int> min_pi_factors(const CMatrix& A, const ToleranceCfg& cfg = {});

CMatrix kronecker(const CMatrix& A, const CMatrix& B);

}  // namespace pim
