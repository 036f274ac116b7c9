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

#include "pim/core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pim {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotPartialIsometry: return "NotPartialIsometry";
    case ErrorKind::NotContraction: return "NotContraction";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::InputOutOfDisk: return "InputOutOfDisk";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::DefectNotOne: return "DefectNotOne";
    case ErrorKind::DefectMismatch: return "DefectMismatch";
    case ErrorKind::NotCnu: return "NotCnu";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::SpectralGapTooSmall: return "SpectralGapTooSmall";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::RootOffCircle: return "RootOffCircle";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
  }
  return "Error";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::RootOffCircle:
    case ErrorKind::SingularDenominator:
    case ErrorKind::IllConditioned:
    case ErrorKind::SpectralGapTooSmall:
    case ErrorKind::EmptyIntersection:
      return true;
    default:
      return false;
  }
}

std::string Error::report() const {
  return std::string(kind_name(kind_)) + ": " + what();
}

void ToleranceCfg::validate() const {
  for (double t : {abs_tol, rank_rel_tol, unimodular_tol}) {
    if (!(t > 0.0 && t < 1.0)) {
      throw Error(ErrorKind::InvalidInput, "tolerances must lie in (0, 1)");
    }
  }
}

PolyC::PolyC(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw Error(ErrorKind::InvalidInput, "polynomial degree must be at least 1");
  }
  if (coeffs_[0] != cplx(1.0, 0.0)) {
    throw Error(ErrorKind::InvalidInput, "polynomial must be monic");
  }
}

PolyC PolyC::from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= r * c[k];
    }
    c = std::move(next);
  }
  return PolyC(std::move(c));
}

cplx PolyC::operator()(cplx z) const {
  cplx acc = 0.0;
  for (const cplx& c : coeffs_) acc = acc * z + c;
  return acc;
}

bool approx_eq(const PolyC& a, const PolyC& b, double tol) {
  if (a.degree() != b.degree()) return false;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const cplx x = a.coeffs()[k];
    const cplx y = b.coeffs()[k];
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(x - y) > tol * scale) return false;
  }
  return true;
}

void require_square(const CMatrix& A, const char* what) {
  if (A.rows() != A.cols() || A.rows() == 0) {
    std::ostringstream os;
    os << what << " must be square and nonempty, got " << A.rows() << "x"
       << A.cols();
    throw Error(ErrorKind::NotSquare, os.str());
  }
}

void require_finite(const CMatrix& A, const char* what) {
  if (!A.allFinite()) {
    throw Error(ErrorKind::InvalidInput,
                std::string(what) + " has non-finite entries");
  }
}

double max_abs_diff(const CMatrix& A, const CMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "matrices differ in shape");
  }
  if (A.size() == 0) return 0.0;
  return (A - B).cwiseAbs().maxCoeff();
}

bool approx_eq(const CMatrix& A, const CMatrix& B, const ToleranceCfg& cfg) {
  const double d = max_abs_diff(A, B);
  return d <= cfg.abs_tol * std::max(1.0, A.norm());
}

Svd svd(const CMatrix& A) {
  require_finite(A, "svd input");
  Eigen::JacobiSVD<CMatrix> solver(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "SVD did not converge");
  }
  return Svd{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

Schur schur(const CMatrix& A) {
  require_square(A, "schur input");
  require_finite(A, "schur input");
  Eigen::ComplexSchur<CMatrix> solver(A, true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Schur iteration did not converge");
  }
  Schur s{solver.matrixU(), solver.matrixT()};
  for (Eigen::Index j = 0; j < s.T.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < s.T.rows(); ++i) s.T(i, j) = 0.0;
  }
  return s;
}

void schur_swap(Schur& s, Eigen::Index k) {
  const Eigen::Index n = s.T.rows();
  if (k < 0 || k + 1 >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "schur_swap index out of range");
  }
  const cplx a = s.T(k, k);
  const cplx b = s.T(k + 1, k + 1);
  const cplx c = s.T(k, k + 1);
  // Eigenvector of [[a, c], [0, b]] for eigenvalue b.
  cplx x1 = c;
  cplx x2 = b - a;
  const double len = std::hypot(std::abs(x1), std::abs(x2));
  if (len == 0.0) return;
  x1 /= len;
  x2 /= len;
  Eigen::Matrix2cd G;
  G << x1, -std::conj(x2), x2, std::conj(x1);
  s.T.middleRows(k, 2) = G.adjoint() * s.T.middleRows(k, 2);
  s.T.middleCols(k, 2) = s.T.middleCols(k, 2) * G;
  s.Q.middleCols(k, 2) = s.Q.middleCols(k, 2) * G;
  s.T(k + 1, k) = 0.0;
  s.T(k, k) = b;
  s.T(k + 1, k + 1) = a;
}

std::vector<cplx> eigenvalues(const CMatrix& A) {
  const Schur s = schur(A);
  std::vector<cplx> ev(static_cast<std::size_t>(A.rows()));
  for (Eigen::Index i = 0; i < A.rows(); ++i) ev[static_cast<std::size_t>(i)] = s.T(i, i);
  return ev;
}

RVector singular_values(const CMatrix& A) {
  require_finite(A, "svd input");
  Eigen::JacobiSVD<CMatrix> solver(A);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "SVD did not converge");
  }
  return solver.singularValues();
}

double spectral_norm(const CMatrix& A) {
  if (A.size() == 0) return 0.0;
  return singular_values(A)(0);
}

int rank_above(const CMatrix& A, double threshold) {
  if (A.size() == 0) return 0;
  const RVector s = singular_values(A);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) ++r;
  }
  return r;
}

int numeric_rank(const CMatrix& A, const ToleranceCfg& cfg) {
  if (A.size() == 0) return 0;
  const RVector s = singular_values(A);
  if (s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cfg.rank_rel_tol * s(0)) ++r;
  }
  return r;
}

CMatrix null_space(const CMatrix& A, const ToleranceCfg& cfg) {
  const int r = numeric_rank(A, cfg);
  const Svd d = svd(A);
  return d.V.rightCols(A.cols() - r);
}

PolyC char_poly(const CMatrix& A) { return PolyC::from_roots(eigenvalues(A)); }

double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  while (!a.empty()) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const double d = std::abs(a[i] - b[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    worst = std::max(worst, best);
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(bi));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return worst;
}

CMatrix psd_sqrt(const CMatrix& H) {
  require_square(H, "psd_sqrt input");
  const CMatrix Hs = (H + H.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(Hs);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver failed");
  }
  // Eigenvalues at rounding level are treated as zero.
  const RVector& ev = es.eigenvalues();
  const double floor = 8.0 * static_cast<double>(H.rows()) *
                       std::numeric_limits<double>::epsilon() *
                       std::max(1.0, ev.cwiseAbs().maxCoeff());
  RVector d = ev.unaryExpr([floor](double x) { return x <= floor ? 0.0 : std::sqrt(x); });
  return es.eigenvectors() * d.cast<cplx>().asDiagonal() *
         es.eigenvectors().adjoint();
}

CMatrix direct_sum(const CMatrix& A, const CMatrix& B) {
  CMatrix out = CMatrix::Zero(A.rows() + B.rows(), A.cols() + B.cols());
  out.topLeftCorner(A.rows(), A.cols()) = A;
  out.bottomRightCorner(B.rows(), B.cols()) = B;
  return out;
}

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

}  // namespace pim
