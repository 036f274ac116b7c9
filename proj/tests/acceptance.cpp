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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "pim/errors.hpp"
#include "pim/factor.hpp"
#include "pim/livsic.hpp"
#include "pim/modelspace.hpp"
#include "pim/numrange.hpp"
#include "pim/predicates.hpp"
#include "pim/products.hpp"
#include "pim/similar.hpp"
#include "pim/synth.hpp"
#include "pim/usim.hpp"
#include "testutil.hpp"

using namespace pim;
using namespace pim::testing;

namespace {

const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);
const double s5 = std::sqrt(5.0);
const double r2 = 1 / s2;

// Collects failed checks for one criterion.
struct Ledger {
  std::vector<std::string> failures;
  long checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  void near(double got, double bound, const std::string& what) {
    std::ostringstream os;
    os << what << " (" << got << " > " << bound << ")";
    expect(got <= bound, os.str());
  }
};

CMatrix jordan_block(int k, cplx lambda) {
  CMatrix J = lambda * identity(k);
  for (int i = 0; i + 1 < k; ++i) J(i, i + 1) = 1.0;
  return J;
}

JordanData jd(std::vector<JordanGroup> g) {
  JordanData J{std::move(g)};
  J.normalize(1e-10);
  return J;
}

CMatrix basis(int n, std::vector<int> cols) {
  CMatrix K = CMatrix::Zero(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) K(cols[j], static_cast<Eigen::Index>(j)) = 1.0;
  return K;
}

CMatrix nilpotent_31() { return mat({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}); }
CMatrix nilpotent_22() { return mat({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}); }

CMatrix transpose_pair() {
  CMatrix A = CMatrix::Zero(5, 5);
  A(0, 1) = 1;
  A(1, 2) = 0.5;
  A(3, 0) = 1;
  A(4, 2) = s3 / 2;
  return A;
}

cplx g4(cplx z) { return z * z * (2.0 * z + s2) / (2.0 * (z + s2)); }

CMatrix w4(cplx z) {
  CMatrix W(2, 2);
  W << z * r2, g4(z), -z * r2, g4(z);
  return W;
}

struct LivsicCase {
  LivsicFunction L;
  std::function<CMatrix(cplx)> closed;
};

std::vector<LivsicCase> livsic_examples() {
  std::vector<LivsicCase> out;
  const CMatrix U3 = mat({{-0.5, -r2, 0.5}, {-0.5, r2, 0.5}, {r2, 0, r2}});
  out.push_back({LivsicFunction::from_parts(U3, basis(3, {0})), [](cplx z) {
                   CMatrix w(1, 1);
                   w(0, 0) = -z * std::pow((z - r2) / (1.0 - z * r2), 2);
                   return w;
                 }});
  const CMatrix U4 = mat({{0, 0, 1, 0}, {r2, -r2, 0, 0}, {0.5, 0.5, 0, -r2}, {0.5, 0.5, 0, r2}});
  out.push_back({LivsicFunction::from_parts(U4, basis(4, {3, 2})), w4});
  const CMatrix U5 = mat({{0, 0.5, -r2, 0.5, 0}, {1, 0, 0, 0, 0}, {0, 0.5, r2, 0.5, 0}, {0, r2, 0, -r2, 0}, {0, 0, 0, 0, 1}});
  out.push_back({LivsicFunction::from_parts(U5, basis(5, {4, 2, 0})), [](cplx z) {
                   CMatrix w = CMatrix::Zero(3, 3);
                   w(0, 0) = z;
                   w.bottomRightCorner(2, 2) = w4(z);
                   return w;
                 }});
  return out;
}

std::pair<CMatrix, CMatrix> commuting_pair(int n, Rng& rng) {
  const CMatrix V = haar_unitary(n, rng);
  CMatrix Da = CMatrix::Zero(n, n), Db = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Da(i, i) = uniform(rng, 0, 1) < 0.6 ? 1.0 : 0.0;
    Db(i, i) = uniform(rng, 0, 1) < 0.6 ? 1.0 : 0.0;
  }
  return {haar_unitary(n, rng) * Da * V.adjoint(), V * Db * haar_unitary(n, rng).adjoint()};
}

void golden(Ledger& t) {
  const CMatrix A = mat({{0, 0}, {s3 / 2, 0.5}});
  const CMatrix B = mat({{0, 1}, {0, 0}});
  const CMatrix C = mat({{2, -1, 0}, {2, 2, 0}, {-1, 2, 0}}) / 3.0;
  t.near(max_abs_diff(A.adjoint() * A, mat({{0.75, s3 / 4}, {s3 / 4, 0.25}})), 1e-9, "A*A");
  t.near(max_abs_diff(A * A.adjoint(), diag({0, 1})), 1e-9, "AA*");
  t.near(max_abs_diff(B.adjoint() * B, diag({0, 1})), 1e-9, "B*B");
  t.near(max_abs_diff(B * B.adjoint(), diag({1, 0})), 1e-9, "BB*");
  t.near(max_abs_diff(C.adjoint() * C, diag({1, 1, 0})), 1e-9, "C*C");
  t.near(max_abs_diff(C * C.adjoint(), mat({{5, 2, -4}, {2, 8, 2}, {-4, 2, 5}}) / 9.0), 1e-9, "CC*");
  const Projections pa = projections(A), pc = projections(C);
  t.near(max_abs_diff(pa.initial, mat({{0.75, s3 / 4}, {s3 / 4, 0.25}})), 1e-9, "initial projection");
  t.near(max_abs_diff(pc.final, mat({{5, 2, -4}, {2, 8, 2}, {-4, 2, 5}}) / 9.0), 1e-9, "final projection");

  const CMatrix A32 = mat({{1, 0, 0}, {0, s3 / 2, 0}, {0, 0.5, 0}});
  const CMatrix U32 = mat({{0, 1, 0}, {s3 / 2, 0, -0.5}, {0.5, 0, s3 / 2}});
  const CMatrix V32 = mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  t.near(max_abs_diff(U32 * x_r(3, 2) * V32.adjoint(), A32), 1e-9, "displayed SVD");
  const SvdCanonical c = svd_canonical(A32);
  t.near(max_abs_diff(c.U * x_r(3, c.r) * c.V.adjoint(), A32), 1e-9, "computed SVD");

  const CMatrix A9 = mat({{8, 2, 2}, {2, 5, -4}, {-2, 4, -5}}) / 9.0;
  const CMatrix V9 = mat({{2 / s5, 2 / (3 * s5), -1.0 / 3}, {0, s5 / 3, 2.0 / 3}, {1 / s5, -4 / (3 * s5), 2.0 / 3}});
  const CMatrix N9 = mat({{3.0 / 5, 8.0 / 15}, {8.0 / 15, 13.0 / 45}, {-4 / (3 * s5), 16 / (9 * s5)}});
  const CMatrix F = V9.adjoint() * A9 * V9;
  t.near(max_abs_diff(F.leftCols(2), N9), 1e-9, "displayed N");
  t.near(F.col(2).cwiseAbs().maxCoeff(), 1e-9, "zero column");
  const CMatrix Bp = N9.topRows(2), Cp = N9.bottomRows(1);
  t.near(max_abs_diff(Bp.adjoint() * Bp + Cp.adjoint() * Cp, identity(2)), 1e-9, "displayed B*B+C*C");
  const BlockForm bf = block_form(A9);
  t.near(max_abs_diff(bf.B.adjoint() * bf.B + bf.C.adjoint() * bf.C, identity(2)), 1e-9, "computed B*B+C*C");
  t.near(multiset_distance(eigenvalues(bf.B), eigenvalues(Bp)), 1e-9, "B up to unitary similarity");

  const CMatrix W = mat({{1, 0, 0}, {0, s3 / 2, -0.5}, {0, 0.5, s3 / 2}});
  const CMatrix P = diag({1, 1, 0});
  const CMatrix Q = mat({{1, 0, 0}, {0, 0.75, s3 / 4}, {0, s3 / 4, 0.25}});
  t.near(max_abs_diff(W * P, A32), 1e-9, "W*P");
  t.near(max_abs_diff(Q * W, A32), 1e-9, "Q*W");
  const PolarFactors pf = polar_factor(A32);
  t.near(max_abs_diff(pf.P, P), 1e-9, "computed P");
  t.near(max_abs_diff(pf.Q, Q), 1e-9, "computed Q");
  t.near(max_abs_diff(pf.W * pf.P, A32), 1e-9, "computed W*P");
  t.near(max_abs_diff(pf.Q * pf.W, A32), 1e-9, "computed Q*W");
}

void pseudo_oracle(Ledger& t) {
  Rng rng(2001);
  for (int k = 0; k < 1000; ++k) {
    const CMatrix A = k % 2 ? random_pi(4, rng) : gaussian(4, 4, rng);
    t.expect(is_pi_via_pseudoinverse(A) == is_partial_isometry(A), "verdicts differ");
  }
}

void product_oracle(Ledger& t) {
  Rng rng(2002);
  for (int k = 0; k < 500; ++k) {
    const int n = uniform_int(rng, 3, 6);
    CMatrix A, B;
    if (k % 2) {
      std::tie(A, B) = commuting_pair(n, rng);
    } else {
      A = random_pi(n, rng);
      B = random_pi(n, rng);
    }
    t.expect(product_is_pi(A, B).verdict == is_partial_isometry(A * B), "verdicts differ");
  }
  const CMatrix A = mat({{1, 0, 0}, {0, 0.5, 0}, {0, s3 / 2, 0}});
  const CMatrix B = mat({{0, 0, 0}, {2.0 / 3, 2.0 / 3, 1.0 / 3}, {1.0 / 3, -2.0 / 3, 2.0 / 3}});
  const CMatrix AB = mat({{0, 0, 0}, {1.0 / 3, 1.0 / 3, 1.0 / 6}, {1 / s3, 1 / s3, 1 / (2 * s3)}});
  t.near(max_abs_diff(A * B, AB), 1e-9, "worked product");
  t.expect(product_is_pi(A, B).verdict, "worked example verdict");
  t.expect(numeric_rank(A * B) == 1, "worked product rank");
}

void synthesis(Ledger& t) {
  Rng rng(2003);
  for (int k = 0; k < 200; ++k) {
    const int n = uniform_int(rng, 1, 10);
    std::vector<cplx> roots{0.0};
    const int units = uniform_int(rng, 0, std::min(2, n - 1));
    for (int i = 1; i < n; ++i) {
      roots.push_back(i <= units ? std::polar(1.0, uniform(rng, 0, 2 * M_PI)) : disk_point(rng, 0.05, 0.95));
    }
    const CMatrix A = synth_from_roots(roots);
    t.expect(A.rows() == n, "size");
    t.expect(is_partial_isometry(A), "not a partial isometry");
    t.near(multiset_distance(eigenvalues(A), roots), 1e-7, "eigenvalue pairing");
  }
}

void similarity(Ledger& t) {
  t.expect(similar_to_pi(jd({{0.5, {1, 1}}, {0.0, {1, 1}}})), "first possible form");
  t.expect(similar_to_pi(jd({{0.5, {2}}, {0.0, {1, 1}}})), "second possible form");
  t.expect(similar_to_pi(jd({{0.5, {2}}, {0.0, {2}}})), "third possible form");
  t.expect(!similar_to_pi(jd({{0.5, {1, 1}}, {0.0, {2}}})), "impossible form");
  Rng rng(2004);
  for (int k = 0; k < 100; ++k) {
    std::vector<JordanGroup> g;
    JordanGroup zero{0.0, {}};
    const int z = uniform_int(rng, 1, 3);
    int total = 0;
    for (int i = 0; i < z; ++i) {
      zero.sizes.push_back(uniform_int(rng, 1, 2));
      total += zero.sizes.back();
    }
    g.push_back(zero);
    for (int d = 0; d < uniform_int(rng, 0, 2) && total < 7; ++d) {
      JordanGroup h{std::polar(0.25 + 0.3 * d + uniform(rng, 0, 0.05), uniform(rng, 0, 2 * M_PI)), {}};
      for (int i = 0; i < uniform_int(rng, 1, z) && total < 8; ++i) {
        h.sizes.push_back(uniform_int(rng, 1, 2));
        total += h.sizes.back();
      }
      if (!h.sizes.empty()) g.push_back(h);
    }
    for (int u = 0; u < uniform_int(rng, 0, 2) && total < 8; ++u, ++total) g.push_back({std::polar(1.0, 0.5 + 2.5 * u), {1}});
    const JordanData J = jd(g);
    t.expect(similar_to_pi(J), "admissible data rejected");
    const CMatrix A = realize_similar_pi(J);
    t.expect(is_partial_isometry(A), "realization is not a partial isometry");
    t.expect(jordan_equal(jordan_of(A), J, 1e-6), "round trip");
  }
}

void trace_words(Ledger& t) {
  const CMatrix A = transpose_pair();
  const Word w = Word::parse("x3y3x2y2");
  t.near(std::abs(trace_word(A, w) - 0.25), 1e-12, "trace on A");
  t.near(std::abs(trace_word(A.transpose(), w) - 0.0625), 1e-12, "trace on transpose");
  const auto& dj = djokovic_words();
  for (std::size_t i = 0; i + 1 < dj.size(); ++i) {
    t.near(std::abs(trace_word(A, dj[i]) - trace_word(A.transpose(), dj[i])), 1e-10, "word " + dj[i].str());
  }
  t.expect(dj.back() == w, "word 20");
}

void livsic_closed_forms(Ledger& t) {
  const std::vector<cplx> pts = livsic_sample_points(16);
  for (const LivsicCase& c : livsic_examples()) {
    for (cplx z : pts) t.near(max_abs_diff(livsic_eval(c.L, z), c.closed(z)), 1e-8, "closed form");
  }
  const LivsicFunction La = livsic_build(nilpotent_31()), Lb = livsic_build(nilpotent_22());
  for (cplx z : pts) {
    const double r = std::abs(z);
    const RVector sa = singular_values(livsic_eval(La, z)), sb = singular_values(livsic_eval(Lb, z));
    t.near(std::abs(sa(0) - r) + std::abs(sa(1) - r * r * r), 1e-8, "diag(z, z^3)");
    t.near(std::abs(sb(0) - r * r) + std::abs(sb(1) - r * r), 1e-8, "diag(z^2, z^2)");
  }
  t.expect(livsic_equivalent(nilpotent_31(), nilpotent_22()).verdict == LivsicVerdict::NotEquivalent, "verdict");
}

void boundary_unitarity(Ledger& t) {
  std::vector<LivsicFunction> all;
  for (const LivsicCase& c : livsic_examples()) all.push_back(c.L);
  all.push_back(livsic_build(mat({{0, -r2, 0.5}, {0, r2, 0.5}, {0, 0, r2}})));
  all.push_back(livsic_build(nilpotent_31()));
  all.push_back(livsic_build(nilpotent_22()));
  for (const LivsicFunction& L : all) {
    for (int k = 0; k < 32; ++k) {
      const CMatrix w = livsic_radial_limit(L, std::polar(1.0, 2 * M_PI * (k + 0.25) / 32));
      t.near((w.adjoint() * w - identity(L.r)).norm(), 1e-6, "boundary unitarity");
    }
  }
}

void model_space(Ledger& t) {
  t.near(max_abs_diff(model_matrix(ModelParams{{0.5}}), mat({{0, s3 / 2}, {0, 0.5}})), 1e-12, "model (1/2)");
  Rng rng(2005);
  for (int n = 1; n <= 8; ++n) {
    std::vector<cplx> l;
    for (int i = 1; i < n; ++i) l.push_back(disk_point(rng, 0, 0.8));
    const ModelParams p{l};
    const std::vector<cplx> nodes = circle_nodes(512);
    CMatrix G = CMatrix::Zero(n, n);
    for (const cplx& z : nodes) {
      CVector v(n);
      for (int i = 0; i < n; ++i) v(i) = takenaka_eval(p, i, z);
      G += v.conjugate() * v.transpose();
    }
    G /= 512.0;
    t.near((G - identity(n)).norm(), 1e-6, "Gram residual");
  }
  for (int k = 0; k < 50; ++k) {
    const int n = uniform_int(rng, 2, 8);
    std::vector<cplx> l;
    for (int i = 1; i < n; ++i) l.push_back(disk_point(rng, 0, 0.9));
    const CMatrix A = cnu_defect_one(l, rng);
    std::vector<cplx> ev = eigenvalues(A);
    ev.erase(std::min_element(ev.begin(), ev.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); }));
    t.expect(defect_one_usim(A, model_matrix(ModelParams{ev})), "model cross-check");
  }
}

void numerical_range(Ledger& t) {
  for (const auto& l : {std::vector<cplx>{0.5}, std::vector<cplx>{1 / s2, 1 / s3, 1 / s5}}) {
    const ModelParams p{l};
    const NRRegion S = nr_sweep(model_matrix(p), 720);
    const NRRegion I = nr_intersection(p, 360);
    t.near(nr_hausdorff(S, I), 0.01, "sweep vs intersection");
    if (l.size() == 1) t.near(conic_fit_residual(boundary_points(I)), 1e-3, "conic fit");
  }
  Rng rng(2006);
  std::vector<cplx> five;
  for (int k = 0; k < 5; ++k) five.push_back(std::polar(1.0, 0.3 + 2 * M_PI * k / 5 + 0.2 * std::sin(k)));
  const CMatrix V = haar_unitary(5, rng);
  for (const CMatrix& N : {CMatrix(V * diag(five) * V.adjoint()), diag({1, cplx(0, 1), -1}), diag({0, 1})}) {
    t.near(nr_hausdorff(nr_normal_hull(N), nr_sweep(N, 720)), 0.01, "normal hull vs sweep");
  }
}

void properties(Ledger& t) {
  Rng rng(2007);
  for (int k = 0; k < 200; ++k) {
    const int n = uniform_int(rng, 1, 8);
    const int r = uniform_int(rng, 1, n);
    const CMatrix A = random_pi(n, r, rng);
    t.near(std::abs(spectral_norm(A) - 1.0), 1e-10, "norm one");
    const CMatrix P = projections(A).initial;
    t.near(((A * P).adjoint() * (A * P) - P).norm(), 1e-10, "isometric on initial space");
    t.expect(numeric_rank(A.adjoint() * A) == numeric_rank(A), "ker A*A = ker A");
  }
  for (int k = 0; k < 40; ++k) {
    const int n = uniform_int(rng, 2, 6);
    std::vector<cplx> l;
    for (int i = 1; i < n; ++i) l.push_back(disk_point(rng, 0, 0.9));
    const CMatrix T = cnu_defect_one(l, rng);
    double rho = 0;
    for (const cplx& z : eigenvalues(T)) rho = std::max(rho, std::abs(z));
    const int steps = static_cast<int>(std::ceil(std::log(1e-6) / std::log((1 + rho) / 2))) + n;
    CMatrix Pk = identity(n);
    for (int i = 0; i < steps; ++i) Pk = Pk * T;
    t.near(spectral_norm(Pk), 1e-6, "cnu power decay");
  }
  for (int k = 0; k < 20; ++k) {
    const CMatrix V = haar_unitary(4, rng);
    const CMatrix A = V * synth_from_roots({0, 0.5, std::polar(1.0, uniform(rng, 0, 6.28)), 0.3}) * V.adjoint();
    CMatrix Pk = identity(4);
    bool ok = true;
    for (int i = 0; i < 60; ++i) {
      Pk = Pk * A;
      ok = ok && spectral_norm(Pk) >= 1 - 1e-8;
    }
    t.expect(ok, "powers with a unitary part stay at norm one");
  }
  for (int k = 0; k < 60; ++k) {
    const int n = uniform_int(rng, 1, 4);
    const CMatrix A = random_contraction(n, rng), Q = haar_unitary(n, rng);
    t.expect(unitarily_similar(dilate(A), dilate(Q * A * Q.adjoint()), ToleranceCfg{1e-8, 1e-8, 1e-8}).kind != UsimKind::No,
             "dilation keeps unitary similarity");
    const CMatrix B = random_contraction(n, rng);
    if (n >= 2 && unitarily_similar(A, B).kind == UsimKind::No) {
      t.expect(unitarily_similar(dilate(A), dilate(B)).kind == UsimKind::No, "dilation separates");
    }
    const CMatrix C = k % 2 ? random_pi(n, rng) : random_contraction(n, rng);
    t.expect(is_partial_isometry(dilate(C) * dilate(B)) == is_partial_isometry(C), "dilation products");
  }
  for (int k = 0; k < 200; ++k) {
    const int n = uniform_int(rng, 1, 4), m = uniform_int(rng, 1, 4);
    auto pick = [&](int s) -> CMatrix {
      if (uniform(rng, 0, 1) < 0.6) return random_pi(s, uniform_int(rng, 1, s), rng);
      return random_contraction(s, rng);
    };
    const CMatrix A = pick(n), B = pick(m);
    t.expect(is_partial_isometry(kronecker(A, B)) == (is_partial_isometry(A) && is_partial_isometry(B)), "kronecker iff");
  }
  for (int k = 0; k < 100; ++k) {
    t.expect(transpose_probe(random_pi(uniform_int(rng, 1, 4), rng)).kind == UsimKind::Yes, "transpose probe");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Ledger&)>>> criteria{
      {"golden examples", golden},
      {"pseudoinverse oracle", pseudo_oracle},
      {"product oracle", product_oracle},
      {"synthesis from roots", synthesis},
      {"similarity to a partial isometry", similarity},
      {"trace words separate a matrix from its transpose", trace_words},
      {"characteristic function closed forms", livsic_closed_forms},
      {"boundary unitarity", boundary_unitarity},
      {"model space", model_space},
      {"numerical range", numerical_range},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Ledger t;
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = t.failures.empty();
    failed += !ok;
    std::printf("[%s] %zu %s (%ld checks)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), t.checks);
    for (const std::string& f : t.failures) std::printf("       %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
