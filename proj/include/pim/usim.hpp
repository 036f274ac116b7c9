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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pim/core.hpp"

namespace pim {

// Word over {x, y}; y stands for the adjoint of x.
class Word {
 public:
  explicit Word(std::string letters);
  // Accepts "xxy", "x2y", "x^2y" and mixtures.
  static Word parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  int degree() const { return static_cast<int>(letters_.size()); }
  std::string str() const;     // x^3y^3x^2y^2
  std::string pretty() const;  // x³y³x²y²

  auto operator<=>(const Word&) const = default;

 private:
  std::string letters_;
};

const std::vector<Word>& murnaghan_words();
const std::vector<Word>& sibirskii_words();
const std::vector<Word>& djokovic_words();
const std::vector<Word>& pi_four_words();
// All words of length 1..max_degree up to cyclic rotation, ordered by
// length then lexicographically.
std::vector<Word> necklace_words(int max_degree);

struct TraceSignature {
  std::vector<std::pair<Word, cplx>> entries;
  cplx at(const Word& w) const;
};

cplx trace_word(const CMatrix& A, const Word& w);
TraceSignature trace_signature(const CMatrix& A, const std::vector<Word>& words);

CMatrix dilate(const CMatrix& A, const ToleranceCfg& cfg = {});

enum class UsimKind { Yes, No, UpToDegree };

struct UsimVerdict {
  UsimKind kind = UsimKind::Yes;
  int degree = 0;  // cap used for UpToDegree
  std::optional<Word> witness;
  cplx value_a = 0.0;
  cplx value_b = 0.0;
};

constexpr int kDefaultDegreeCap = 8;
constexpr int kMaxDegreeCap = 16;

UsimVerdict unitarily_similar(const CMatrix& A, const CMatrix& B,
                              const ToleranceCfg& cfg = {},
                              int degree_cap = kDefaultDegreeCap);
bool pi_usim_small(const CMatrix& A, const CMatrix& B, const ToleranceCfg& cfg = {});
bool defect_one_usim(const CMatrix& A, const CMatrix& B, const ToleranceCfg& cfg = {});

struct CnuSplit {
  CMatrix Q;
  CMatrix T;  // upper triangular, spectrum in the open disk
  CMatrix U;  // diagonal unitary
};

CnuSplit cnu_split(const CMatrix& A, const ToleranceCfg& cfg = {});
UsimVerdict transpose_probe(const CMatrix& A, const ToleranceCfg& cfg = {},
                            int degree_cap = kDefaultDegreeCap);

// Characteristic polynomial comparison used by the small-size and
// defect-one criteria.
bool same_char_poly(const CMatrix& A, const CMatrix& B, const ToleranceCfg& cfg);

}  // namespace pim
