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

// Partial isometry of size |roots| with exactly these eigenvalues. Roots
// must lie in the closed unit disk and include zero.
CMatrix synth_from_roots(const std::vector<cplx>& roots, const ToleranceCfg& cfg = {});

// Upper-triangular partial isometry with diagonal (0, ξ1, ..., ξ_{n-1}) and
// nonvanishing first superdiagonal.
CMatrix synth_superdiagonal(const std::vector<cplx>& xis, const ToleranceCfg& cfg = {});

bool weyl_horn_feasible(const std::vector<double>& sigmas,
                        const std::vector<cplx>& lambdas,
                        const ToleranceCfg& cfg = {});

}  // namespace pim
