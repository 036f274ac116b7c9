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

#include "pim/similar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pim/predicates.hpp"
#include "pim/synth.hpp"

namespace pim {

int JordanData::size() const {
  int n = 0;
  for (const auto& g : groups) n += std::accumulate(g.sizes.begin(), g.sizes.end(), 0);
  return n;
}

int JordanData::block_count(cplx eig, double tol) const {
  for (const auto& g : groups) {
    if (std::abs(g.eig - eig) <= tol) return static_cast<int>(g.sizes.size());
  }
  return 0;
}

void JordanData::normalize(double tol) {
  if (groups.empty()) throw Error(ErrorKind::InvalidInput, "empty Jordan data");
  for (auto& g : groups) {
    if (g.sizes.empty()) throw Error(ErrorKind::InvalidInput, "eigenvalue without blocks");
    for (int s : g.sizes) {
      if (s < 1) throw Error(ErrorKind::InvalidInput, "block sizes must be positive");
    }
    if (!std::isfinite(g.eig.real()) || !std::isfinite(g.eig.imag())) {
      throw Error(ErrorKind::InvalidInput, "eigenvalue is not finite");
    }
    std::sort(g.sizes.begin(), g.sizes.end(), std::greater<>());
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (std::abs(groups[i].eig - groups[j].eig) <= tol) {
        throw Error(ErrorKind::InvalidInput, "eigenvalues are not distinct");
      }
    }
  }
  std::sort(groups.begin(), groups.end(), [](const JordanGroup& a, const JordanGroup& b) {
    if (std::abs(a.eig) != std::abs(b.eig)) return std::abs(a.eig) < std::abs(b.eig);
    return std::arg(a.eig) < std::arg(b.eig);
  });
}

bool jordan_equal(const JordanData& a, const JordanData& b, double eig_tol) {
  if (a.groups.size() != b.groups.size()) return false;
  std::vector<bool> used(b.groups.size(), false);
  for (const auto& g : a.groups) {
    bool found = false;
    for (std::size_t j = 0; j < b.groups.size(); ++j) {
      if (used[j] || std::abs(b.groups[j].eig - g.eig) > eig_tol) continue;
      std::vector<int> x = g.sizes, y = b.groups[j].sizes;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return false;
      used[j] = true;
      found = true;
      break;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<cplx>> cluster(const std::vector<cplx>& ev, double radius) {
  const std::size_t n = ev.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(ev[i] - ev[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<cplx>> out;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(ev[i]);
  }
  return out;
}

// Nullities of (A − μI)^k for k = 1..m; empty when the staircase does not
// reach m.
std::vector<int> staircase(const CMatrix& A, cplx mu, int m, const ToleranceCfg& cfg) {
  const Eigen::Index n = A.rows();
  const CMatrix B = A - mu * identity(n);
  const double scale = std::max(1.0, spectral_norm(B));
  std::vector<int> nul;
  CMatrix P = identity(n);
  for (int k = 1; k <= m; ++k) {
    P = P * B;
    const double thresh = cfg.rank_rel_tol * std::pow(scale, k);
    nul.push_back(static_cast<int>(n) - rank_above(P, thresh));
  }
  if (nul.back() != m) return {};
  for (std::size_t k = 1; k < nul.size(); ++k) {
    if (nul[k] < nul[k - 1]) return {};
  }
  return nul;
}

std::vector<int> sizes_from_staircase(const std::vector<int>& nul) {
  std::vector<int> atleast(nul.size() + 1, 0);
  for (std::size_t k = 0; k < nul.size(); ++k) {
    atleast[k] = nul[k] - (k == 0 ? 0 : nul[k - 1]);
  }
  std::vector<int> sizes;
  for (std::size_t k = 0; k < nul.size(); ++k) {
    const int exact = atleast[k] - atleast[k + 1];
    for (int c = 0; c < exact; ++c) sizes.push_back(static_cast<int>(k) + 1);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace

JordanData jordan_of(const CMatrix& A, const ToleranceCfg& cfg) {
  require_square(A, "matrix");
  const std::vector<cplx> ev = eigenvalues(A);
  const double floor_radius = 10.0 * cfg.abs_tol;
  for (double radius = 1e-2; radius >= floor_radius * 0.999; radius /= 10.0) {
    const auto clusters = cluster(ev, radius);
    JordanData J;
    bool ok = true;
    for (const auto& c : clusters) {
      cplx mu = std::accumulate(c.begin(), c.end(), cplx(0.0)) / static_cast<double>(c.size());
      const auto nul = staircase(A, mu, static_cast<int>(c.size()), cfg);
      if (nul.empty()) {
        ok = false;
        break;
      }
      if (std::abs(mu) <= floor_radius) mu = 0.0;
      J.groups.push_back(JordanGroup{mu, sizes_from_staircase(nul)});
    }
    if (ok && J.size() == A.rows()) {
      J.normalize(0.0);
      return J;
    }
  }
  throw Error(ErrorKind::IllConditioned, "eigenvalue clustering is ambiguous");
}

bool similar_to_pi(const JordanData& J, const ToleranceCfg& cfg) {
  const int zero_blocks = J.block_count(0.0, cfg.abs_tol);
  for (const auto& g : J.groups) {
    const double r = std::abs(g.eig);
    if (r <= cfg.abs_tol) continue;
    if (r > 1.0 + cfg.unimodular_tol) return false;
    if (on_circle(g.eig, cfg)) {
      for (int s : g.sizes) {
        if (s != 1) return false;
      }
      continue;
    }
    if (static_cast<int>(g.sizes.size()) > zero_blocks) return false;
  }
  return true;
}

CMatrix realize_similar_pi(const JordanData& Jin, const ToleranceCfg& cfg) {
  JordanData J = Jin;
  J.normalize(cfg.abs_tol);
  if (!similar_to_pi(J, cfg)) {
    throw Error(ErrorKind::NotRealizable, "Jordan data is not similar to a partial isometry");
  }
  std::vector<int> zero_sizes;
  std::vector<cplx> unit;
  std::vector<JordanGroup> disk;
  for (const auto& g : J.groups) {
    if (std::abs(g.eig) <= cfg.abs_tol) {
      zero_sizes = g.sizes;
    } else if (on_circle(g.eig, cfg)) {
      for (std::size_t c = 0; c < g.sizes.size(); ++c) unit.push_back(g.eig / std::abs(g.eig));
    } else {
      disk.push_back(g);
    }
  }
  std::stable_sort(disk.begin(), disk.end(), [](const JordanGroup& a, const JordanGroup& b) {
    return std::abs(a.eig) > std::abs(b.eig);
  });

  const std::size_t m = zero_sizes.size();
  std::vector<std::vector<cplx>> diag(m);
  for (std::size_t g = 0; g < m; ++g) diag[g].assign(static_cast<std::size_t>(zero_sizes[g] - 1), 0.0);
  std::size_t next = 0;
  for (const auto& g : disk) {
    for (int s : g.sizes) {
      diag[next].insert(diag[next].end(), static_cast<std::size_t>(s), g.eig);
      next = (next + 1) % m;
    }
  }

  CMatrix out(0, 0);
  for (const auto& d : diag) out = direct_sum(out, synth_superdiagonal(d, cfg));
  CMatrix U = CMatrix::Zero(static_cast<Eigen::Index>(unit.size()),
                            static_cast<Eigen::Index>(unit.size()));
  for (std::size_t i = 0; i < unit.size(); ++i) {
    U(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = unit[i];
  }
  out = direct_sum(out, U);
  if (!is_partial_isometry(out, cfg)) {
    throw Error(ErrorKind::IllConditioned, "realized matrix failed the partial isometry check");
  }
  return out;
}

}  // namespace pim
