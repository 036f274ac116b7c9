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

#include "pim/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pim {

namespace {

double cross(cplx o, cplx a, cplx b) {
  return (a - o).real() * (b - o).imag() - (a - o).imag() * (b - o).real();
}

double theta_of(int k, int m) { return 2.0 * M_PI * k / m; }

std::vector<NRSample> samples_from_vertices(const std::vector<cplx>& v, int m) {
  std::vector<NRSample> out;
  for (int k = 0; k < m; ++k) {
    const double t = theta_of(k, m);
    const cplx dir = std::polar(1.0, -t);
    NRSample s{t, -INFINITY, 0.0};
    for (const cplx& z : v) {
      const double h = (dir * z).real();
      if (h > s.support) {
        s.support = h;
        s.boundary = z;
      }
    }
    out.push_back(s);
  }
  return out;
}

// Keeps the part of a convex polygon on the left of a → b.
std::vector<cplx> clip_left(const std::vector<cplx>& poly, cplx a, cplx b, double eps) {
  std::vector<cplx> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  auto side = [&](cplx p) { return cross(a, b, p) / std::max(1e-300, std::abs(b - a)); };
  for (std::size_t i = 0; i < n; ++i) {
    const cplx p = poly[i];
    const cplx q = poly[(i + 1) % n];
    const double sp = side(p);
    const double sq = side(q);
    if (sp >= -eps) out.push_back(p);
    if ((sp >= -eps) != (sq >= -eps) && n > 1) {
      const double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

std::vector<cplx> dedupe(const std::vector<cplx>& poly, double tol) {
  std::vector<cplx> out;
  for (const cplx& z : poly) {
    if (out.empty() || std::abs(z - out.back()) > tol) out.push_back(z);
  }
  while (out.size() > 1 && std::abs(out.front() - out.back()) <= tol) out.pop_back();
  return out;
}

std::vector<cplx> clip_convex(std::vector<cplx> poly, const std::vector<cplx>& clipper,
                              double eps) {
  const std::size_t n = clipper.size();
  if (n == 1) {
    const bool inside = std::any_of(poly.begin(), poly.end(), [&](cplx z) {
      return std::abs(z - clipper[0]) <= eps;
    });
    return inside ? clipper : std::vector<cplx>{};
  }
  if (n == 2) {
    const cplx a = clipper[0], b = clipper[1];
    const cplx d = b - a;
    const cplx nrm = d * cplx(0.0, 1.0);
    poly = clip_left(poly, a, b, eps);
    poly = clip_left(poly, b, a, eps);
    poly = clip_left(poly, a, a - nrm, eps);
    poly = clip_left(poly, b, b + nrm, eps);
    return dedupe(poly, eps);
  }
  for (std::size_t i = 0; i < n && !poly.empty(); ++i) {
    poly = clip_left(poly, clipper[i], clipper[(i + 1) % n], eps);
  }
  return dedupe(poly, eps);
}

}  // namespace

NRRegion nr_sweep(const CMatrix& A, int m) {
  require_square(A, "matrix");
  require_finite(A, "matrix");
  if (m < 8) throw Error(ErrorKind::InvalidInput, "sweep needs at least 8 samples");
  NRRegion region;
  for (int k = 0; k < m; ++k) {
    const double t = theta_of(k, m);
    const cplx e = std::polar(1.0, -t);
    const CMatrix H = (e * A + std::conj(e) * A.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    if (es.info() != Eigen::Success) {
      throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver failed");
    }
    const Eigen::Index top = H.rows() - 1;
    const CVector x = es.eigenvectors().col(top);
    region.samples.push_back({t, es.eigenvalues()(top), x.dot(A * x)});
  }
  return region;
}

std::vector<cplx> convex_hull(std::vector<cplx> pts, double tol) {
  std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts = dedupe(pts, tol);
  if (pts.size() <= 2) {
    if (pts.size() == 2 && std::abs(pts[0] - pts[1]) <= tol) pts.pop_back();
    return pts;
  }
  std::vector<cplx> hull(2 * pts.size());
  std::size_t k = 0;
  for (const cplx& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= tol) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= tol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

NRRegion nr_normal_hull(const CMatrix& A, const ToleranceCfg& cfg, int m) {
  require_square(A, "matrix");
  const double comm = (A * A.adjoint() - A.adjoint() * A).norm();
  if (comm > cfg.abs_tol * std::max(1.0, A.squaredNorm())) {
    std::ostringstream os;
    os << "matrix is not normal (commutator norm " << comm << ")";
    throw Error(ErrorKind::NotNormal, os.str());
  }
  if (m < 8) throw Error(ErrorKind::InvalidInput, "hull sampling needs at least 8 samples");
  NRRegion region;
  region.vertices = convex_hull(eigenvalues(A), 1e-12);
  region.samples = samples_from_vertices(*region.vertices, m);
  return region;
}

std::vector<cplx> nr_polygon_Q(const ModelParams& p, cplx xi, const ToleranceCfg& cfg) {
  p.validate(cfg);
  return blaschke_preimages(range_blaschke(p), xi, cfg);
}

NRRegion nr_intersection(const ModelParams& p, int m, const ToleranceCfg& cfg) {
  if (m < 16) throw Error(ErrorKind::InvalidInput, "intersection needs at least 16 directions");
  std::vector<cplx> poly = nr_polygon_Q(p, 1.0, cfg);
  const double eps = 1e-12;
  for (int k = 1; k < m && !poly.empty(); ++k) {
    poly = clip_convex(poly, nr_polygon_Q(p, std::polar(1.0, theta_of(k, m)), cfg), eps);
  }
  if (poly.empty()) throw Error(ErrorKind::EmptyIntersection, "polygon intersection is empty");
  NRRegion region;
  region.vertices = poly;
  region.samples = samples_from_vertices(poly, m);
  return region;
}

bool nr_equal(const CMatrix& A, const CMatrix& B, int m, const ToleranceCfg&) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "matrices differ in size");
  }
  const NRRegion a = nr_sweep(A, m);
  const NRRegion b = nr_sweep(B, m);
  double gap = 0.0;
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    gap = std::max(gap, std::abs(a.samples[k].support - b.samples[k].support));
  }
  return gap <= 10.0 / m;
}

std::vector<cplx> boundary_points(const NRRegion& region) {
  if (region.vertices) return *region.vertices;
  std::vector<cplx> out;
  for (const auto& s : region.samples) out.push_back(s.boundary);
  return out;
}

double support_at(const NRRegion& region, double theta) {
  const cplx dir = std::polar(1.0, -theta);
  double h = -INFINITY;
  if (region.vertices) {
    for (const cplx& z : *region.vertices) h = std::max(h, (dir * z).real());
  } else {
    for (const auto& s : region.samples) h = std::max(h, (dir * s.boundary).real());
  }
  return h;
}

double nr_hausdorff(const NRRegion& a, const NRRegion& b, int grid) {
  double worst = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double t = theta_of(k, grid);
    worst = std::max(worst, std::abs(support_at(a, t) - support_at(b, t)));
  }
  return worst;
}

double convexity_defect(const NRRegion& region) {
  const auto& s = region.samples;
  const std::size_t n = s.size();
  double worst = -INFINITY;
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = s[(k + n - 1) % n].support;
    const double next = s[(k + 1) % n].support;
    const double delta = 2.0 * M_PI / static_cast<double>(n);
    worst = std::max(worst, 2.0 * std::cos(delta) * s[k].support - prev - next);
  }
  return worst;
}

bool point_in_polygon(const std::vector<cplx>& polygon, cplx z, double slack) {
  const std::size_t n = polygon.size();
  if (n == 0) return false;
  if (n == 1) return std::abs(z - polygon[0]) <= slack;
  if (n == 2) {
    const cplx a = polygon[0], b = polygon[1];
    const double t = std::clamp(((z - a) * std::conj(b - a)).real() / std::norm(b - a), 0.0, 1.0);
    return std::abs(z - (a + t * (b - a))) <= slack;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = polygon[i], b = polygon[(i + 1) % n];
    if (cross(a, b, z) / std::abs(b - a) < -slack) return false;
  }
  return true;
}

double conic_fit_residual(const std::vector<cplx>& points) {
  if (points.size() < 6) throw Error(ErrorKind::InvalidInput, "conic fit needs six points");
  cplx c = 0.0;
  for (const cplx& z : points) c += z;
  c /= static_cast<double>(points.size());
  double scale = 0.0;
  for (const cplx& z : points) scale = std::max(scale, std::abs(z - c));
  if (scale == 0.0) return 0.0;
  Eigen::MatrixXd D(static_cast<Eigen::Index>(points.size()), 6);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const cplx z = (points[i] - c) / scale;
    const double x = z.real(), y = z.imag();
    D.row(static_cast<Eigen::Index>(i)) << x * x, x * y, y * y, x, y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(D, Eigen::ComputeFullV);
  const Eigen::VectorXd q = svd.matrixV().col(5);
  double acc = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const cplx z = (points[i] - c) / scale;
    const double x = z.real(), y = z.imag();
    const double f = q(0) * x * x + q(1) * x * y + q(2) * y * y + q(3) * x + q(4) * y + q(5);
    const double gx = 2 * q(0) * x + q(1) * y + q(3);
    const double gy = q(1) * x + 2 * q(2) * y + q(4);
    const double g = std::hypot(gx, gy);
    const double d = g > 0 ? f / g : std::abs(f);
    acc += d * d;
  }
  return scale * std::sqrt(acc / static_cast<double>(points.size()));
}

}  // namespace pim
