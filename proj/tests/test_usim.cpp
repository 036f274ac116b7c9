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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "pim/errors.hpp"
#include "pim/modelspace.hpp"
#include "pim/predicates.hpp"
#include "pim/synth.hpp"
#include "pim/usim.hpp"
#include "testutil.hpp"

using namespace pim;
using namespace pim::testing;

namespace {

const double s3 = std::sqrt(3.0);

CMatrix transpose_pair() {
  CMatrix A = CMatrix::Zero(5, 5);
  A(0, 1) = 1;
  A(1, 2) = 0.5;
  A(3, 0) = 1;
  A(4, 2) = s3 / 2;
  return A;
}

CMatrix nilpotent_31() { return mat({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}); }
CMatrix nilpotent_22() { return mat({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}); }

bool is_yes(const UsimVerdict& v) { return v.kind != UsimKind::No; }

CMatrix power(const CMatrix& A, int k) {
  CMatrix P = identity(A.rows());
  for (int i = 0; i < k; ++i) P = P * A;
  return P;
}

}  // namespace

TEST_CASE("words") {
  CHECK(Word::parse("x^3y^3x^2y^2").letters() == "xxxyyyxxyy");
  CHECK(Word::parse("x3y3x2y2") == Word::parse("xxxyyyxxyy"));
  CHECK(Word::parse("xxy").str() == "x^2y");
  CHECK(Word::parse("xxxyyyxxyy").pretty() == "x³y³x²y²");
  CHECK_THROWS_AS(Word::parse(""), Error);
  CHECK_THROWS_AS(Word::parse("xz"), Error);
  CHECK(murnaghan_words().size() == 3);
  CHECK(sibirskii_words().size() == 7);
  CHECK(djokovic_words().size() == 20);
  REQUIRE(pi_four_words().size() == 6);
  CHECK(pi_four_words()[5] == Word::parse("x3y3x2y2"));
  CHECK(djokovic_words()[19] == Word::parse("x3y3x2y2"));
  // Cyclic classes of binary words: 2, 3, 4, 6 necklaces of lengths 1..4.
  CHECK(necklace_words(4).size() == 2 + 3 + 4 + 6);
}

TEST_CASE("trace words") {
  CHECK(std::abs(trace_word(diag({1, 2}), Word::parse("x")) - 3.0) < 1e-15);
  Rng rng(71);
  for (int r = 0; r <= 5; ++r) {
    const CMatrix A = random_pi(5, r, rng);
    CHECK(std::abs(trace_word(A, Word::parse("xy")) - double(r)) < 1e-12);
  }
  const CMatrix A = transpose_pair();
  CHECK(std::abs(trace_word(A, Word::parse("x3y3x2y2")) - 0.25) < 1e-14);
  CHECK(std::abs(trace_word(A.transpose(), Word::parse("x3y3x2y2")) - 0.0625) < 1e-14);
  // The remaining nineteen words do not separate A from its transpose.
  const auto& dj = djokovic_words();
  for (std::size_t i = 0; i + 1 < dj.size(); ++i) {
    CHECK(std::abs(trace_word(A, dj[i]) - trace_word(A.transpose(), dj[i])) < 1e-14);
  }
  const TraceSignature sig = trace_signature(A, dj);
  CHECK(sig.entries.size() == 20);
  CHECK(std::abs(sig.at(dj[19]) - 0.25) < 1e-14);
}

TEST_CASE("trace identities for partial isometries") {
  Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 1, 6);
    const CMatrix A = random_pi(n, rng);
    const CMatrix As = A.adjoint();
    CHECK(std::abs(trace_word(A, Word::parse("yx2")) - A.trace()) < 1e-11);
    CHECK(std::abs(trace_word(A, Word::parse("y2x2")) - ((As * A) * (A * As)).trace()) < 1e-11);
    CHECK(std::abs(trace_word(A, Word::parse("xyx")) - A.trace()) < 1e-11);
    // yxy = y for a partial isometry.
    CHECK(std::abs(trace_word(A, Word::parse("x3y3xy")) - trace_word(A, Word::parse("x3y3"))) < 1e-11);
  }
}

TEST_CASE("dilation") {
  CHECK(max_abs_diff(dilate(CMatrix::Zero(1, 1)), mat({{0, 1}, {0, 0}})) < 1e-15);
  CHECK(max_abs_diff(dilate(mat({{0.5}})), mat({{0.5, s3 / 2}, {0, 0}})) < 1e-15);
  CHECK_THROWS_AS(dilate(mat({{1.5}})), Error);
  Rng rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 1, 6);
    const CMatrix A = random_contraction(n, rng);
    const CMatrix M = dilate(A);
    REQUIRE(M.rows() == 2 * n);
    CHECK(is_partial_isometry(M));
    CHECK(approx_eq(M * M.adjoint(), direct_sum(identity(n), CMatrix::Zero(n, n))));
    CHECK(max_abs_diff(M.topLeftCorner(n, n), A) < 1e-15);
  }
}

TEST_CASE("dilation respects unitary similarity") {
  Rng rng(74);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 1, 4);
    const CMatrix A = random_contraction(n, rng);
    const CMatrix Q = haar_unitary(n, rng);
    CHECK(is_yes(unitarily_similar(dilate(A), dilate(Q * A * Q.adjoint()), ToleranceCfg{1e-8, 1e-8, 1e-8})));
    const CMatrix B = random_contraction(n, rng);
    if (n >= 2 && !is_yes(unitarily_similar(A, B))) {
      CHECK_FALSE(is_yes(unitarily_similar(dilate(A), dilate(B))));
    }
  }
}

TEST_CASE("products of dilations") {
  Rng rng(75);
  int yes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 5);
    const CMatrix A = trial % 2 ? random_pi(n, rng) : random_contraction(n, rng);
    const CMatrix B = random_contraction(n, rng);
    const bool v = is_partial_isometry(dilate(A) * dilate(B));
    CHECK(v == is_partial_isometry(A));
    yes += v;
  }
  CHECK(yes > 50);
}

TEST_CASE("unitary similarity examples") {
  CHECK(unitarily_similar(diag({1, 0}), diag({0, 1})).kind == UsimKind::Yes);
  const UsimVerdict v = unitarily_similar(transpose_pair(), transpose_pair().transpose());
  CHECK(v.kind == UsimKind::No);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == Word::parse("x3y3x2y2"));
  CHECK(std::abs(v.value_a - 0.25) < 1e-12);
  CHECK(std::abs(v.value_b - 0.0625) < 1e-12);
  CHECK(unitarily_similar(nilpotent_31(), nilpotent_22()).kind == UsimKind::No);

  Rng rng(76);
  const CMatrix A = random_pi(6, rng), U = haar_unitary(6, rng);
  const UsimVerdict w = unitarily_similar(A, U * A * U.adjoint());
  CHECK(w.kind == UsimKind::UpToDegree);
  CHECK(w.degree == kDefaultDegreeCap);
}

TEST_CASE("small size partial isometry criteria") {
  CHECK_FALSE(pi_usim_small(mat({{0, 1}, {0, 0}}), CMatrix::Zero(2, 2)));
  CHECK_FALSE(unitarily_similar(mat({{0, 1}, {0, 0}}), CMatrix::Zero(2, 2)).kind == UsimKind::Yes);
  CHECK_FALSE(pi_usim_small(nilpotent_31(), nilpotent_22()));
  CHECK_THROWS_AS(pi_usim_small(diag({2, 0}), diag({2, 0})), Error);
  CHECK_THROWS_AS(pi_usim_small(transpose_pair(), transpose_pair()), Error);

  Rng rng(77);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 2, 4);
    const CMatrix A = random_pi(n, rng);
    CMatrix B;
    switch (trial % 4) {
      case 0: {
        const CMatrix U = haar_unitary(n, rng);
        B = U * A * U.adjoint();
        break;
      }
      case 1:
        B = A.transpose();
        break;
      case 2: {
        // Same eigenvalues and rank, built independently.
        const std::vector<cplx> ev = eigenvalues(A);
        const int r = numeric_rank(A);
        B = random_pi(n, r, rng);
        if (r == n - 1 || r == n) B = A.conjugate();
        break;
      }
      default:
        B = random_pi(n, rng);
    }
    const bool small = pi_usim_small(A, B);
    const bool general = unitarily_similar(A, B, ToleranceCfg{1e-9, 1e-8, 1e-8}).kind == UsimKind::Yes;
    CHECK(small == general);
    yes += small;
    no += !small;
  }
  CHECK(yes > 100);
  CHECK(no > 50);
}

TEST_CASE("defect one criterion") {
  try {
    defect_one_usim(nilpotent_31(), nilpotent_22());
    FAIL("expected DefectNotOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DefectNotOne);
  }
  CHECK(defect_one_usim(synth_from_roots({0, 0.5}), model_matrix(ModelParams{{0.5}})));

  Rng rng(78);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 2, 7);
    std::vector<cplx> ls;
    for (int i = 1; i < n; ++i) ls.push_back(disk_point(rng, 0, 0.9));
    const CMatrix A = cnu_defect_one(ls, rng);
    CHECK(defect_one_usim(A, A.transpose()));
    const CMatrix B = cnu_defect_one(ls, rng);
    CHECK(defect_one_usim(A, B));
    std::vector<cplx> other = ls;
    other[0] = other[0] * 0.5 + 0.3;
    if (std::abs(other[0]) < 0.95) CHECK_FALSE(defect_one_usim(A, cnu_defect_one(other, rng)));
  }
}

TEST_CASE("cnu splitting of the block example") {
  CMatrix A = CMatrix::Zero(4, 4);
  A(0, 1) = s3 / 2;
  A(1, 1) = 0.5;
  A(2, 2) = -1;
  A(3, 3) = 1;
  const CnuSplit s = cnu_split(A);
  REQUIRE(s.T.rows() == 2);
  REQUIRE(s.U.rows() == 2);
  CHECK(approx_eq(s.Q.adjoint() * s.Q, identity(4)));
  CHECK(approx_eq(s.Q.adjoint() * A * s.Q, direct_sum(s.T, s.U)));
  CHECK(max_abs_diff(s.U, diag({1, -1})) < 1e-12);
  // Upper triangular 2x2 matrices are unitarily similar exactly when the
  // diagonals match as multisets and the off-diagonal moduli agree.
  CHECK(multiset_distance({s.T(0, 0), s.T(1, 1)}, {0.0, 0.5}) < 1e-12);
  CHECK(std::abs(std::abs(s.T(0, 1)) - s3 / 2) < 1e-12);
  CHECK(std::abs(s.T(1, 0)) < 1e-12);
}

TEST_CASE("cnu splitting edge cases and random inputs") {
  Rng rng(79);
  const CMatrix W = haar_unitary(4, rng);
  const CnuSplit u = cnu_split(W);
  CHECK(u.T.rows() == 0);
  CHECK(multiset_distance(eigenvalues(u.U), eigenvalues(W)) < 1e-10);
  const CMatrix C = cnu_defect_one({0.5, cplx(0, 0.3)}, rng);
  CHECK(cnu_split(C).U.rows() == 0);
  CHECK_THROWS_AS(cnu_split(diag({2, 0})), Error);

  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 2, 8);
    const int units = uniform_int(rng, 0, n - 1);
    std::vector<cplx> roots{0.0};
    for (int i = 1; i < n; ++i) {
      roots.push_back(i <= units ? std::polar(1.0, uniform(rng, 0, 6.28)) : disk_point(rng, 0, 0.9));
    }
    const CMatrix V = haar_unitary(n, rng);
    const CMatrix A = V * synth_from_roots(roots) * V.adjoint();
    const CnuSplit s = cnu_split(A);
    CHECK(s.U.rows() == units);
    CHECK((s.Q.adjoint() * A * s.Q - direct_sum(s.T, s.U)).norm() < 1e-8);
    CHECK(is_partial_isometry(s.T));
    CHECK(s.T.triangularView<Eigen::StrictlyLower>().toDenseMatrix().norm() < 1e-12);
    for (Eigen::Index i = 0; i < s.T.rows(); ++i) CHECK(std::abs(s.T(i, i)) < 1 - 1e-8);
    if (s.U.rows() > 0) CHECK(approx_eq(s.U.adjoint() * s.U, identity(s.U.rows())));
  }
}

TEST_CASE("powers of cnu partial isometries decay") {
  Rng rng(80);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform_int(rng, 2, 6);
    std::vector<cplx> ls;
    for (int i = 1; i < n; ++i) ls.push_back(disk_point(rng, 0, 0.9));
    const CMatrix T = cnu_defect_one(ls, rng);
    double rho = 0;
    for (const cplx& z : eigenvalues(T)) rho = std::max(rho, std::abs(z));
    const int k = static_cast<int>(std::ceil(std::log(1e-6) / std::log((1 + rho) / 2))) + n;
    CHECK(spectral_norm(power(T, k)) <= 1e-6);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix V = haar_unitary(4, rng);
    const CMatrix A = V * synth_from_roots({0, 0.5, std::polar(1.0, uniform(rng, 0, 6.28)), 0.3}) * V.adjoint();
    CMatrix P = identity(4);
    for (int k = 1; k <= 60; ++k) {
      P = P * A;
      CHECK(spectral_norm(P) >= 1 - 1e-8);
    }
  }
}

TEST_CASE("transpose probes") {
  Rng rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = uniform_int(rng, 1, 4);
    CHECK(transpose_probe(random_pi(n, rng)).kind == UsimKind::Yes);
  }
  CHECK(transpose_probe(haar_unitary(3, rng)).kind == UsimKind::Yes);
  CHECK(transpose_probe(transpose_pair()).kind == UsimKind::No);
  CHECK_THROWS_AS(transpose_probe(diag({2, 0})), Error);
}
