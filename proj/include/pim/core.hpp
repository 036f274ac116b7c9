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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "pim/errors.hpp"

namespace pim {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

struct ToleranceCfg {
  double abs_tol = 1e-10;
  double rank_rel_tol = 1e-8;
  double unimodular_tol = 1e-8;

  // Throws InvalidInput unless every tolerance lies in (0, 1).
  void validate() const;
};

// Monic polynomial, coefficients in descending powers (coeffs[0] == 1).
class PolyC {
 public:
  explicit PolyC(std::vector<cplx> coeffs);
  static PolyC from_roots(const std::vector<cplx>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx operator()(cplx z) const;

 private:
  std::vector<cplx> coeffs_;
};

// Coefficientwise comparison, relative to max(1, |a_k|, |b_k|).
bool approx_eq(const PolyC& a, const PolyC& b, double tol);

struct Svd {
  CMatrix U;
  RVector sigmas;  // descending
  CMatrix V;
};

struct Schur {
  CMatrix Q;
  CMatrix T;
};

void require_square(const CMatrix& A, const char* what);
void require_finite(const CMatrix& A, const char* what);

bool approx_eq(const CMatrix& A, const CMatrix& B, const ToleranceCfg& cfg = {});
double max_abs_diff(const CMatrix& A, const CMatrix& B);

Svd svd(const CMatrix& A);
Schur schur(const CMatrix& A);

// Swaps the diagonal entries k and k+1 of s.T by a unitary rotation,
// keeping A = Q T Q* intact.
void schur_swap(Schur& s, Eigen::Index k);

std::vector<cplx> eigenvalues(const CMatrix& A);
RVector singular_values(const CMatrix& A);
double spectral_norm(const CMatrix& A);

int numeric_rank(const CMatrix& A, const ToleranceCfg& cfg = {});
// Count of singular values above an absolute threshold.
int rank_above(const CMatrix& A, double threshold);

// Orthonormal basis of ker A (columns), from the SVD.
CMatrix null_space(const CMatrix& A, const ToleranceCfg& cfg = {});

PolyC char_poly(const CMatrix& A);

// Greedy nearest-neighbour pairing; returns the largest paired distance,
// or +inf for different sizes.
double multiset_distance(std::vector<cplx> a, std::vector<cplx> b);

// Principal square root of a Hermitian positive semidefinite matrix.
CMatrix psd_sqrt(const CMatrix& H);

CMatrix direct_sum(const CMatrix& A, const CMatrix& B);
CMatrix identity(Eigen::Index n);

}  // namespace pim
