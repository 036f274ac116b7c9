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

#include "pim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pim/predicates.hpp"

namespace pim {

namespace {

// [[A, z], [0, λ]] with z spanning (ran A)^⊥, ‖z‖² = 1 − |λ|², and the last
// entry of z made real and nonnegative.
CMatrix append_root(const CMatrix& A, cplx lambda, const ToleranceCfg& cfg) {
  const Eigen::Index k = A.rows();
  const Svd d = svd(A);
  const int r = numeric_rank(A, cfg);
  if (r != k - 1) {
    throw Error(ErrorKind::IllConditioned, "range complement is not one-dimensional");
  }
  CVector z = d.U.col(r);
  Eigen::Index pivot = k - 1;
  if (std::abs(z(pivot)) <= cfg.rank_rel_tol) z.cwiseAbs().maxCoeff(&pivot);
  z *= std::polar(1.0, -std::arg(z(pivot)));
  z *= std::sqrt(std::max(0.0, 1.0 - std::norm(lambda)));
  CMatrix out = CMatrix::Zero(k + 1, k + 1);
  out.topLeftCorner(k, k) = A;
  out.topRightCorner(k, 1) = z;
  out(k, k) = lambda;
  return out;
}

}  // namespace

CMatrix synth_from_roots(const std::vector<cplx>& roots, const ToleranceCfg& cfg) {
  if (roots.empty()) throw Error(ErrorKind::NotRealizable, "no roots given");
  for (const cplx& z : roots) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::InvalidInput, "root is not finite");
    }
    if (std::abs(z) > 1.0 + cfg.unimodular_tol) {
      std::ostringstream os;
      os << "root " << z << " lies outside the closed unit disk";
      throw Error(ErrorKind::NotRealizable, os.str());
    }
  }
  std::vector<cplx> rest = roots;
  auto zero = std::min_element(rest.begin(), rest.end(), [](cplx a, cplx b) {
    return std::abs(a) < std::abs(b);
  });
  if (std::abs(*zero) > cfg.abs_tol) {
    throw Error(ErrorKind::NotRealizable, "roots must include zero");
  }
  rest.erase(zero);

  std::vector<cplx> unit, disk;
  for (const cplx& z : rest) {
    if (on_circle(z, cfg)) {
      unit.push_back(z / std::abs(z));
    } else {
      disk.push_back(z);
    }
  }
  std::stable_sort(disk.begin(), disk.end(),
                   [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });

  CMatrix A = CMatrix::Zero(static_cast<Eigen::Index>(unit.size()) + 1,
                            static_cast<Eigen::Index>(unit.size()) + 1);
  for (std::size_t i = 0; i < unit.size(); ++i) {
    A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = unit[i];
  }
  for (const cplx& lambda : disk) A = append_root(A, lambda, cfg);
  return A;
}

CMatrix synth_superdiagonal(const std::vector<cplx>& xis, const ToleranceCfg& cfg) {
  for (const cplx& xi : xis) {
    if (!(std::abs(xi) < 1.0 - cfg.unimodular_tol)) {
      std::ostringstream os;
      os << "diagonal entry " << xi << " is not inside the open unit disk";
      throw Error(ErrorKind::InputOutOfDisk, os.str());
    }
  }
  CMatrix V = CMatrix::Zero(1, 1);
  for (const cplx& xi : xis) {
    V = append_root(V, xi, cfg);
    const Eigen::Index k = V.rows() - 1;
    if (std::abs(V(k - 1, k)) <= cfg.rank_rel_tol) {
      throw Error(ErrorKind::IllConditioned, "superdiagonal entry vanished");
    }
  }
  return V;
}

bool weyl_horn_feasible(const std::vector<double>& sigmas,
                        const std::vector<cplx>& lambdas, const ToleranceCfg& cfg) {
  if (sigmas.size() != lambdas.size()) {
    throw Error(ErrorKind::ShapeMismatch, "sigma and lambda counts differ");
  }
  std::vector<double> s = sigmas;
  std::sort(s.begin(), s.end(), std::greater<>());
  std::vector<double> m;
  for (const cplx& z : lambdas) m.push_back(std::abs(z));
  std::sort(m.begin(), m.end(), std::greater<>());
  double ps = 1.0, pm = 1.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    ps *= s[k];
    pm *= m[k];
    const double tol = cfg.abs_tol * std::max({1.0, ps, pm});
    if (ps < pm - tol) return false;
    if (k + 1 == s.size() && std::abs(ps - pm) > tol) return false;
  }
  return true;
}

}  // namespace pim
