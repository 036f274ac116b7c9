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

#include "pim/livsic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "pim/factor.hpp"
#include "pim/predicates.hpp"
#include "pim/usim.hpp"

namespace pim {

LivsicFunction LivsicFunction::from_parts(const CMatrix& extension,
                                          const CMatrix& kernel_basis,
                                          const ToleranceCfg& cfg) {
  require_square(extension, "extension");
  const Eigen::Index n = extension.rows();
  if (kernel_basis.rows() != n || kernel_basis.cols() < 1 || kernel_basis.cols() > n) {
    throw Error(ErrorKind::ShapeMismatch, "kernel basis has the wrong shape");
  }
  if (!approx_eq(extension.adjoint() * extension, identity(n), cfg)) {
    throw Error(ErrorKind::InvalidInput, "extension is not unitary");
  }
  const Eigen::Index r = kernel_basis.cols();
  if (!approx_eq(kernel_basis.adjoint() * kernel_basis, identity(r), cfg)) {
    throw Error(ErrorKind::InvalidInput, "kernel basis is not orthonormal");
  }
  return LivsicFunction{static_cast<int>(n), static_cast<int>(r), extension, kernel_basis};
}

LivsicFunction livsic_build(const CMatrix& A, const ToleranceCfg& cfg) {
  const PIClassification c = classify(A, cfg);
  if (!c.is_pi) throw Error(ErrorKind::NotPartialIsometry, "matrix is not a partial isometry");
  if (!c.is_cnu) {
    throw Error(ErrorKind::NotCnu, "matrix has eigenvalues on the unit circle");
  }
  return LivsicFunction::from_parts(unitary_extension(A, cfg), null_space(A, cfg), cfg);
}

CMatrix livsic_eval(const LivsicFunction& L, cplx z, const ToleranceCfg&) {
  if (!(std::abs(z) < 1.0)) {
    throw Error(ErrorKind::OutsideDisk, "evaluation point must lie in the open unit disk");
  }
  const CMatrix& U = L.extension;
  const CMatrix& K = L.kernel_basis;
  const Eigen::PartialPivLU<CMatrix> lu(U - z * identity(L.n));
  const CMatrix RK = lu.solve(K);
  const CMatrix RUK = lu.solve(U * K);
  const CMatrix G1 = (K.adjoint() * RK).transpose();
  const CMatrix G2 = (K.adjoint() * RUK).transpose();
  const RVector s = singular_values(G2);
  if (s(s.size() - 1) <= 1e-12 * std::max(1.0, s(0))) {
    std::ostringstream os;
    os << "denominator is singular at z = " << z;
    throw Error(ErrorKind::SingularDenominator, os.str());
  }
  return z * G1 * G2.inverse();
}

CMatrix livsic_radial_limit(const LivsicFunction& L, cplx zeta, const ToleranceCfg& cfg,
                            double delta) {
  const cplx u = zeta / std::abs(zeta);
  const CMatrix w1 = livsic_eval(L, (1.0 - delta) * u, cfg);
  const CMatrix w2 = livsic_eval(L, (1.0 - 2.0 * delta) * u, cfg);
  return 2.0 * w1 - w2;
}

std::vector<cplx> livsic_sample_points(int count) {
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  std::vector<cplx> out;
  for (int k = 0; k < count; ++k) {
    const double radius = 0.2 + 0.6 * (k % 4) / 3.0;
    out.push_back(std::polar(radius, 0.1 + golden * k));
  }
  return out;
}

namespace {

// Evaluates at z, nudging the angle when z sits on a pole of the
// denominator.
CMatrix eval_resampling(const LivsicFunction& L, cplx& z, const ToleranceCfg& cfg) {
  for (int attempt = 0;; ++attempt) {
    try {
      return livsic_eval(L, z, cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularDenominator || attempt >= 8) throw;
      z *= std::polar(1.0, 1e-3);
    }
  }
}

std::pair<CMatrix, CMatrix> eval_pair(const LivsicFunction& LA, const LivsicFunction& LB,
                                      cplx z, const ToleranceCfg& cfg) {
  for (int attempt = 0;; ++attempt) {
    try {
      return {livsic_eval(LA, z, cfg), livsic_eval(LB, z, cfg)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularDenominator || attempt >= 8) throw;
      z *= std::polar(1.0, 1e-3);
    }
  }
}

}  // namespace

RatioFit blaschke_ratio(const LivsicFunction& L, const BlaschkeProduct& b,
                        const std::vector<cplx>& points, const ToleranceCfg& cfg) {
  std::vector<cplx> w, bv;
  for (cplx z : points) {
    const CMatrix m = eval_resampling(L, z, cfg);
    w.push_back(m(0, 0));
    bv.push_back(blaschke_eval(b, z));
  }
  cplx num = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) num += w[k] * std::conj(bv[k]);
  RatioFit fit;
  fit.constant = std::abs(num) > 0 ? num / std::abs(num) : cplx(1.0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    fit.deviation = std::max(fit.deviation, std::abs(w[k] - fit.constant * bv[k]));
  }
  return fit;
}

BlaschkeProduct livsic_defect1(const CMatrix& A, const ToleranceCfg& cfg) {
  const LivsicFunction L = livsic_build(A, cfg);
  if (L.r != 1) {
    std::ostringstream os;
    os << "defect is " << L.r;
    throw Error(ErrorKind::DefectNotOne, os.str());
  }
  const Eigen::Index n = A.rows();
  CMatrix P = identity(n);
  for (Eigen::Index k = 0; k < n; ++k) P = P * A;
  const int zero_order = static_cast<int>(n) - rank_above(P, cfg.rank_rel_tol);
  std::vector<cplx> ev = eigenvalues(A);
  std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
  BlaschkeProduct b;
  b.zero_order = zero_order;
  b.zeros.assign(ev.begin(), ev.begin() + (n - zero_order));
  const RatioFit fit = blaschke_ratio(L, b, livsic_sample_points(16), cfg);
  if (fit.deviation > 1e-6) {
    std::ostringstream os;
    os << "characteristic function departs from the spectral Blaschke product by "
       << fit.deviation;
    throw Error(ErrorKind::IllConditioned, os.str());
  }
  return b;
}

LivsicComparison livsic_equivalent(const CMatrix& A, const CMatrix& B,
                                   const ToleranceCfg& cfg) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "matrices differ in size");
  }
  const LivsicFunction LA = livsic_build(A, cfg);
  const LivsicFunction LB = livsic_build(B, cfg);
  if (LA.r != LB.r) {
    std::ostringstream os;
    os << "defects are " << LA.r << " and " << LB.r;
    throw Error(ErrorKind::DefectMismatch, os.str());
  }
  LivsicComparison out;
  out.defect = LA.r;
  const std::vector<cplx> pts = livsic_sample_points(16);
  const double tol = 1e3 * cfg.abs_tol;

  if (LA.r == 1) {
    const bool spectral = same_char_poly(A, B, cfg);
    std::vector<cplx> ratios;
    for (cplx z : pts) {
      const auto [ma, mb] = eval_pair(LA, LB, z, cfg);
      const cplx wa = ma(0, 0);
      const cplx wb = mb(0, 0);
      if (std::abs(wb) < 1e-6) continue;
      ratios.push_back(wa / wb);
    }
    if (ratios.size() < 4) throw Error(ErrorKind::IllConditioned, "too few usable samples");
    for (const cplx& q : ratios) {
      out.gap = std::max(out.gap, std::abs(q - ratios.front()));
      out.gap = std::max(out.gap, std::abs(std::abs(q) - 1.0));
    }
    const bool pointwise = out.gap <= 1e-6;
    if (spectral != pointwise) {
      throw Error(ErrorKind::IllConditioned,
                  "spectral and pointwise equivalence tests disagree");
    }
    out.verdict = spectral ? LivsicVerdict::Equivalent : LivsicVerdict::NotEquivalent;
    return out;
  }

  for (cplx z : pts) {
    const auto [wa, wb] = eval_pair(LA, LB, z, cfg);
    out.gap = std::max(out.gap, (singular_values(wa) - singular_values(wb)).cwiseAbs().maxCoeff());
  }
  out.verdict = out.gap > tol ? LivsicVerdict::NotEquivalent : LivsicVerdict::Inconclusive;
  return out;
}

const char* verdict_name(LivsicVerdict v) {
  switch (v) {
    case LivsicVerdict::Equivalent: return "Equivalent";
    case LivsicVerdict::NotEquivalent: return "NotEquivalent";
    case LivsicVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

}  // namespace pim
