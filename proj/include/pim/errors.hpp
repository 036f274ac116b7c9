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

#include <stdexcept>
#include <string>

namespace pim {

enum class ErrorKind {
  ShapeMismatch,
  NotSquare,
  NotPartialIsometry,
  NotContraction,
  NotRealizable,
  InputOutOfDisk,
  IllConditioned,
  DefectNotOne,
  DefectMismatch,
  NotCnu,
  UnsupportedSize,
  NotNormal,
  IndexOutOfRange,
  OutsideDisk,
  InvalidInput,
  EmptyIntersection,
  SpectralGapTooSmall,
  ConvergenceFailure,
  RootOffCircle,
  SingularDenominator,
};

const char* kind_name(ErrorKind kind);

// True for kinds that signal a numerical breakdown rather than bad input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  // "Kind: detail"
  std::string report() const;

 private:
  ErrorKind kind_;
};

}  // namespace pim
