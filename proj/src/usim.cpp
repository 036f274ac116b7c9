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

#include "pim/usim.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

#include "pim/predicates.hpp"

namespace pim {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorKind::InvalidInput, "empty word");
  for (char c : letters_) {
    if (c != 'x' && c != 'y') {
      throw Error(ErrorKind::InvalidInput, "words use only the letters x and y");
    }
  }
}

Word Word::parse(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'y') {
      throw Error(ErrorKind::InvalidInput, "bad word '" + std::string(text) + "'");
    }
    ++i;
    if (i < text.size() && text[i] == '^') ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    int reps = 1;
    if (j > i) reps = std::stoi(std::string(text.substr(i, j - i)));
    else if (i > 0 && text[i - 1] == '^') {
      throw Error(ErrorKind::InvalidInput, "bad word '" + std::string(text) + "'");
    }
    if (reps < 1) throw Error(ErrorKind::InvalidInput, "bad exponent in word");
    out.append(static_cast<std::size_t>(reps), c);
    i = j;
  }
  return Word(out);
}

namespace {

template <typename F>
std::string run_length(const std::string& s, F exponent) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    out += s[i];
    if (j - i > 1) out += exponent(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(k)) out += digits[c - '0'];
  return out;
}

std::vector<Word> parse_all(std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(Word::parse(w));
  return out;
}

std::string min_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::string r = s.substr(k) + s.substr(0, k);
    if (r < best) best = r;
  }
  return best;
}

}  // namespace

std::string Word::str() const {
  return run_length(letters_, [](int k) { return "^" + std::to_string(k); });
}

std::string Word::pretty() const { return run_length(letters_, superscript); }

const std::vector<Word>& murnaghan_words() {
  static const std::vector<Word> w = parse_all({"x", "x2", "yx"});
  return w;
}

const std::vector<Word>& sibirskii_words() {
  static const std::vector<Word> w =
      parse_all({"x", "x2", "x3", "yx", "yx2", "y2x2", "yx2y2x"});
  return w;
}

const std::vector<Word>& djokovic_words() {
  static const std::vector<Word> w = parse_all(
      {"x", "x2", "xy", "x3", "x2y", "x4", "x3y", "x2y2", "xyxy", "x3y2",
       "x2yx2y", "x2y2xy", "y2x2yx", "x3y2xy", "x3y2x2y", "x3y3xy", "y3x3yx",
       "x3yx2yxy", "x2y2xyx2y", "x3y3x2y2"});
  return w;
}

const std::vector<Word>& pi_four_words() {
  static const std::vector<Word> w =
      parse_all({"x2y2", "x3y2", "x4y2", "x3y3", "x4y", "x3y3x2y2"});
  return w;
}

std::vector<Word> necklace_words(int max_degree) {
  if (max_degree > kMaxDegreeCap) {
    throw Error(ErrorKind::UnsupportedSize, "word degree cap above 16 is not supported");
  }
  std::vector<Word> out;
  for (int len = 1; len <= max_degree; ++len) {
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::string s(static_cast<std::size_t>(len), 'x');
      for (int k = 0; k < len; ++k) {
        if (bits & (1UL << (len - 1 - k))) s[static_cast<std::size_t>(k)] = 'y';
      }
      if (min_rotation(s) == s) out.emplace_back(s);
    }
  }
  return out;
}

cplx TraceSignature::at(const Word& w) const {
  for (const auto& [word, value] : entries) {
    if (word == w) return value;
  }
  throw Error(ErrorKind::InvalidInput, "word " + w.str() + " not in signature");
}

cplx trace_word(const CMatrix& A, const Word& w) {
  require_square(A, "matrix");
  const CMatrix Ad = A.adjoint();
  CMatrix M = w.letters()[0] == 'x' ? A : Ad;
  for (std::size_t i = 1; i < w.letters().size(); ++i) {
    M = M * (w.letters()[i] == 'x' ? A : Ad);
  }
  return M.trace();
}

TraceSignature trace_signature(const CMatrix& A, const std::vector<Word>& words) {
  TraceSignature sig;
  for (const Word& w : words) sig.entries.emplace_back(w, trace_word(A, w));
  return sig;
}

CMatrix dilate(const CMatrix& A, const ToleranceCfg& cfg) {
  require_square(A, "matrix");
  require_finite(A, "matrix");
  if (spectral_norm(A) > 1.0 + cfg.abs_tol * std::max(1.0, A.norm())) {
    throw Error(ErrorKind::NotContraction, "matrix norm exceeds 1");
  }
  const Eigen::Index n = A.rows();
  CMatrix M = CMatrix::Zero(2 * n, 2 * n);
  M.topLeftCorner(n, n) = A;
  M.topRightCorner(n, n) = psd_sqrt(identity(n) - A * A.adjoint());
  return M;
}

namespace {

UsimVerdict compare_words(const CMatrix& A, const CMatrix& B,
                          const std::vector<Word>& words, const ToleranceCfg& cfg) {
  const double scale = std::max({1.0, spectral_norm(A), spectral_norm(B)});
  const double n = static_cast<double>(A.rows());
  UsimVerdict v;
  for (const Word& w : words) {
    const cplx a = trace_word(A, w);
    const cplx b = trace_word(B, w);
    const double tol = 10.0 * n * cfg.abs_tol * std::pow(scale, w.degree());
    if (std::abs(a - b) > tol) {
      v.kind = UsimKind::No;
      v.witness = w;
      v.value_a = a;
      v.value_b = b;
      return v;
    }
  }
  v.kind = UsimKind::Yes;
  return v;
}

void require_same_shape(const CMatrix& A, const CMatrix& B) {
  require_square(A, "first matrix");
  require_square(B, "second matrix");
  if (A.rows() != B.rows()) throw Error(ErrorKind::ShapeMismatch, "matrices differ in size");
}

}  // namespace

UsimVerdict unitarily_similar(const CMatrix& A, const CMatrix& B,
                              const ToleranceCfg& cfg, int degree_cap) {
  require_same_shape(A, B);
  const Eigen::Index n = A.rows();
  if (n <= 2) return compare_words(A, B, murnaghan_words(), cfg);
  if (n == 3) return compare_words(A, B, sibirskii_words(), cfg);
  if (n == 4) return compare_words(A, B, djokovic_words(), cfg);

  if (degree_cap < 1) throw Error(ErrorKind::InvalidInput, "degree cap must be positive");
  const int cap = std::min<long>(degree_cap, 2 * n * n);
  std::vector<Word> words = djokovic_words();
  std::set<std::string> seen;
  for (const Word& w : words) seen.insert(min_rotation(w.letters()));
  for (const Word& w : necklace_words(cap)) {
    if (seen.insert(w.letters()).second) words.push_back(w);
  }
  UsimVerdict v = compare_words(A, B, words, cfg);
  if (v.kind == UsimKind::Yes) {
    v.kind = UsimKind::UpToDegree;
    v.degree = cap;
  }
  return v;
}

bool same_char_poly(const CMatrix& A, const CMatrix& B, const ToleranceCfg& cfg) {
  const double tol = 100.0 * static_cast<double>(A.rows()) * cfg.abs_tol;
  return approx_eq(char_poly(A), char_poly(B), tol);
}

bool pi_usim_small(const CMatrix& A, const CMatrix& B, const ToleranceCfg& cfg) {
  require_same_shape(A, B);
  require_partial_isometry(A, cfg, "first matrix");
  require_partial_isometry(B, cfg, "second matrix");
  const Eigen::Index n = A.rows();
  if (n < 2 || n > 4) {
    throw Error(ErrorKind::UnsupportedSize, "small-size criterion covers n = 2, 3, 4");
  }
  if (!same_char_poly(A, B, cfg)) return false;
  if (numeric_rank(A, cfg) != numeric_rank(B, cfg)) return false;
  if (n == 3) {
    const Word w = Word::parse("x2y2");
    return compare_words(A, B, {w}, cfg).kind == UsimKind::Yes;
  }
  if (n == 4) return compare_words(A, B, pi_four_words(), cfg).kind == UsimKind::Yes;
  return true;
}

bool defect_one_usim(const CMatrix& A, const CMatrix& B, const ToleranceCfg& cfg) {
  require_same_shape(A, B);
  require_partial_isometry(A, cfg, "first matrix");
  require_partial_isometry(B, cfg, "second matrix");
  const int da = defect(A, cfg);
  const int db = defect(B, cfg);
  if (da != 1 || db != 1) {
    std::ostringstream os;
    os << "defects are " << da << " and " << db;
    throw Error(ErrorKind::DefectNotOne, os.str());
  }
  return same_char_poly(A, B, cfg);
}

CnuSplit cnu_split(const CMatrix& A, const ToleranceCfg& cfg) {
  require_partial_isometry(A, cfg, "matrix");
  Schur s = schur(A);
  const Eigen::Index n = A.rows();
  auto key = [&](cplx z) {
    if (in_open_disk(z, cfg)) return std::make_pair(0, 0.0);
    double a = std::arg(z);
    if (a < 0) a += 2.0 * M_PI;
    return std::make_pair(1, a);
  };
  for (Eigen::Index pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (key(s.T(k + 1, k + 1)) < key(s.T(k, k))) {
        schur_swap(s, k);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  Eigen::Index k = 0;
  while (k < n && in_open_disk(s.T(k, k), cfg)) ++k;
  const Eigen::Index m = n - k;
  const CMatrix coupling = s.T.topRightCorner(k, m);
  CMatrix T22 = s.T.bottomRightCorner(m, m);
  const CMatrix off = T22 - CMatrix(T22.diagonal().asDiagonal());
  const double tol = 100.0 * static_cast<double>(n) * cfg.abs_tol * std::max(1.0, A.norm());
  const double gap = std::max(coupling.size() ? coupling.cwiseAbs().maxCoeff() : 0.0,
                              off.size() ? off.cwiseAbs().maxCoeff() : 0.0);
  if (gap > tol) {
    std::ostringstream os;
    os << "unitary part does not decouple (residual " << gap << ")";
    throw Error(ErrorKind::SpectralGapTooSmall, os.str());
  }
  CnuSplit out;
  out.Q = s.Q;
  out.T = s.T.topLeftCorner(k, k);
  out.U = CMatrix(T22.diagonal().asDiagonal());
  return out;
}

UsimVerdict transpose_probe(const CMatrix& A, const ToleranceCfg& cfg, int degree_cap) {
  require_partial_isometry(A, cfg, "matrix");
  return unitarily_similar(A, A.transpose(), cfg, degree_cap);
}

}  // namespace pim
