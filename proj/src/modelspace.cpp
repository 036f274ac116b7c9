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

#include "pim/modelspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace pim {

void BlaschkeProduct::validate() const {
  if (zero_order < 0) throw Error(ErrorKind::InvalidInput, "negative zero order");
  for (const cplx& z : zeros) {
    if (!(std::abs(z) < 1.0)) {
      throw Error(ErrorKind::InputOutOfDisk, "Blaschke zeros must lie in the open disk");
    }
  }
}

void ModelParams::validate(const ToleranceCfg& cfg) const {
  for (const cplx& z : lambdas) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
        !(std::abs(z) < 1.0 - cfg.unimodular_tol)) {
      std::ostringstream os;
      os << "model parameter " << z << " is not inside the open unit disk";
      throw Error(ErrorKind::InputOutOfDisk, os.str());
    }
  }
}

BlaschkeProduct model_blaschke(const ModelParams& p) { return {1, p.lambdas}; }
BlaschkeProduct range_blaschke(const ModelParams& p) { return {2, p.lambdas}; }

cplx blaschke_eval(const BlaschkeProduct& b, cplx z) {
  cplx v = std::pow(z, b.zero_order);
  for (const cplx& a : b.zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

namespace {

// Coefficients in ascending powers.
std::vector<cplx> poly_mul_linear(const std::vector<cplx>& c, cplx c0, cplx c1) {
  std::vector<cplx> out(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k] += c[k] * c0;
    out[k + 1] += c[k] * c1;
  }
  return out;
}

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

cplx horner_deriv(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

}  // namespace

std::vector<cplx> blaschke_preimages(const BlaschkeProduct& b, cplx xi,
                                     const ToleranceCfg& cfg) {
  b.validate();
  if (std::abs(std::abs(xi) - 1.0) > cfg.unimodular_tol) {
    throw Error(ErrorKind::InvalidInput, "target value must be unimodular");
  }
  const int d = b.degree();
  if (d < 1) throw Error(ErrorKind::InvalidInput, "constant Blaschke product");
  std::vector<cplx> num{1.0}, den{1.0};
  for (int k = 0; k < b.zero_order; ++k) num = poly_mul_linear(num, 0.0, 1.0);
  for (const cplx& a : b.zeros) {
    num = poly_mul_linear(num, -a, 1.0);
    den = poly_mul_linear(den, 1.0, -std::conj(a));
  }
  std::vector<cplx> c(num.size(), 0.0);
  for (std::size_t k = 0; k < num.size(); ++k) c[k] = num[k];
  for (std::size_t k = 0; k < den.size(); ++k) c[k] -= xi * den[k];
  const cplx lead = c[static_cast<std::size_t>(d)];
  if (std::abs(lead) < 1e-14) {
    throw Error(ErrorKind::RootOffCircle, "preimage polynomial lost its degree");
  }
  CMatrix companion = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) companion(0, k) = -c[static_cast<std::size_t>(d - 1 - k)] / lead;
  for (int k = 1; k < d; ++k) companion(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<CMatrix> es(companion, false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "companion eigensolver failed");
  }
  std::vector<cplx> roots;
  for (int k = 0; k < d; ++k) {
    cplx z = es.eigenvalues()(k);
    for (int it = 0; it < 8; ++it) {
      const cplx dp = horner_deriv(c, z);
      if (std::abs(dp) == 0.0) break;
      const cplx step = horner(c, z) / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    if (std::abs(std::abs(z) - 1.0) > 1e-6) {
      std::ostringstream os;
      os << "preimage " << z << " is off the unit circle";
      throw Error(ErrorKind::RootOffCircle, os.str());
    }
    roots.push_back(z / std::abs(z));
  }
  auto angle = [](cplx z) {
    double a = std::arg(z);
    return a < 0 ? a + 2.0 * M_PI : a;
  };
  std::sort(roots.begin(), roots.end(), [&](cplx a, cplx b) { return angle(a) < angle(b); });
  return roots;
}

cplx takenaka_eval(const ModelParams& p, int i, cplx z) {
  if (i < 0 || i >= p.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "Takenaka index out of range");
  }
  auto lam = [&](int k) { return k == 0 ? cplx(0.0) : p.lambdas[static_cast<std::size_t>(k - 1)]; };
  cplx v = 1.0;
  for (int k = 0; k < i; ++k) v *= (z - lam(k)) / (1.0 - std::conj(lam(k)) * z);
  return v * std::sqrt(1.0 - std::norm(lam(i))) / (1.0 - std::conj(lam(i)) * z);
}

CMatrix model_matrix(const ModelParams& p) {
  const int n = p.size();
  auto lam = [&](int k) { return k == 0 ? cplx(0.0) : p.lambdas[static_cast<std::size_t>(k - 1)]; };
  CMatrix M = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    M(i, i) = lam(i);
    for (int j = i + 1; j < n; ++j) {
      cplx q = std::sqrt(1.0 - std::norm(lam(i))) * std::sqrt(1.0 - std::norm(lam(j)));
      for (int k = i + 1; k < j; ++k) q *= -std::conj(lam(k));
      M(i, j) = q;
    }
  }
  return M;
}

cplx kernel_eval(const ModelParams& p, cplx lam, cplx z) {
  const BlaschkeProduct b = model_blaschke(p);
  return (1.0 - std::conj(blaschke_eval(b, lam)) * blaschke_eval(b, z)) /
         (1.0 - std::conj(lam) * z);
}

std::vector<cplx> circle_nodes(int count) {
  std::vector<cplx> out;
  for (int k = 0; k < count; ++k) out.push_back(std::polar(1.0, 2.0 * M_PI * k / count));
  return out;
}

}  // namespace pim
