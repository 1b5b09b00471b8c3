#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "cheegerlab/domain.hpp"

namespace testutil {

using cheegerlab::DomainPtr;
using cheegerlab::DomainSpec;
using cheegerlab::Stencil;

using WeightFn = std::function<double(double, double)>;

inline DomainPtr interval_domain(int n, double extent = 1.0,
                                 const WeightFn& a = nullptr,
                                 const WeightFn& b = nullptr) {
  DomainSpec spec;
  spec.dim = 1;
  spec.nx = n;
  spec.ny = 1;
  spec.spacing = extent / n;
  spec.a.resize(n);
  spec.b.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) * spec.spacing;
    spec.a[i] = a ? a(x, 0.0) : 1.0;
    spec.b[i] = b ? b(x, 0.0) : 1.0;
  }
  return cheegerlab::build_domain(spec);
}

inline DomainPtr square_domain(int n, double extent = 1.0,
                               const WeightFn& a = nullptr,
                               const WeightFn& b = nullptr,
                               Stencil st = Stencil::L1) {
  DomainSpec spec;
  spec.dim = 2;
  spec.nx = n;
  spec.ny = n;
  spec.spacing = extent / n;
  spec.stencil = st;
  spec.a.resize(n * n);
  spec.b.resize(n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) * spec.spacing;
      const double y = (j + 0.5) * spec.spacing;
      spec.a[j * n + i] = a ? a(x, y) : 1.0;
      spec.b[j * n + i] = b ? b(x, y) : 1.0;
    }
  }
  return cheegerlab::build_domain(spec);
}

// First Dirichlet eigenvalue of the 1D p-Laplacian on (0,1) with unit
// weights: lambda_p = (p-1) * (2*pi / (p*sin(pi/p)))^p.
inline double analytic_lambda_1d(double p) {
  const double pip = 2.0 * std::numbers::pi / (p * std::sin(std::numbers::pi / p));
  return (p - 1.0) * std::pow(pip, p);
}

// Weighted TV recomputed straight from the grid, independent of the face
// machinery in the library: forward neighbor differences plus the boundary
// trace, L1 stencil only.
inline double brute_tv_l1(const cheegerlab::WeightedDomain& dom,
                          const std::vector<double>& u) {
  const int nx = dom.nx(), ny = dom.ny();
  const double w = std::pow(dom.spacing(), dom.dim() - 1);
  auto val = [&](int i, int j) -> double {
    if (i < 0 || i >= nx || j < 0 || j >= ny) return 0.0;
    const int g = j * nx + i;
    return dom.inside(g) ? u[g] : 0.0;
  };
  auto aval = [&](int i, int j, int i2, int j2) -> double {
    const bool in1 = i >= 0 && i < nx && j >= 0 && j < ny && dom.inside(j * nx + i);
    const bool in2 =
        i2 >= 0 && i2 < nx && j2 >= 0 && j2 < ny && dom.inside(j2 * nx + i2);
    if (in1 && in2) return 0.5 * (dom.a()[j * nx + i] + dom.a()[j2 * nx + i2]);
    if (in1) return dom.a()[j * nx + i];
    if (in2) return dom.a()[j2 * nx + i2];
    return 0.0;
  };
  double tv = 0.0;
  for (int j = 0; j < ny; ++j)
    for (int i = -1; i < nx; ++i) {
      const bool touches =
          (i >= 0 && dom.inside(j * nx + i)) ||
          (i + 1 < nx && dom.inside(j * nx + i + 1));
      if (touches)
        tv += aval(i, j, i + 1, j) * std::fabs(val(i + 1, j) - val(i, j)) * w;
    }
  if (dom.dim() == 2)
    for (int i = 0; i < nx; ++i)
      for (int j = -1; j < ny; ++j) {
        const bool touches =
            (j >= 0 && dom.inside(j * nx + i)) ||
            (j + 1 < ny && dom.inside((j + 1) * nx + i));
        if (touches)
          tv += aval(i, j, i, j + 1) * std::fabs(val(i, j + 1) - val(i, j)) * w;
      }
  return tv;
}

inline std::vector<double> random_field(const cheegerlab::WeightedDomain& dom,
                                        std::mt19937_64& rng, double lo,
                                        double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(dom.grid_size(), 0.0);
  for (int g = 0; g < dom.grid_size(); ++g)
    if (dom.inside(g)) v[g] = dist(rng);
  return v;
}

// Random connected sub-mask of an nx-by-ny grid grown by BFS.
inline std::vector<std::uint8_t> random_connected_mask(int nx, int ny,
                                                       std::mt19937_64& rng) {
  const int n = nx * ny;
  std::uniform_int_distribution<int> cellpick(0, n - 1);
  std::uniform_int_distribution<int> sizepick(1, n);
  const int target = sizepick(rng);
  std::vector<std::uint8_t> mask(n, 0);
  std::vector<int> frontier{cellpick(rng)};
  mask[frontier[0]] = 1;
  int grown = 1;
  while (grown < target && !frontier.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const std::size_t at = pick(rng);
    const int g = frontier[at];
    const int i = g % nx, j = g / nx;
    const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
    std::vector<int> fresh;
    for (auto& c : nb) {
      if (c[0] < 0 || c[0] >= nx || c[1] < 0 || c[1] >= ny) continue;
      const int h = c[1] * nx + c[0];
      if (!mask[h]) fresh.push_back(h);
    }
    if (fresh.empty()) {
      frontier.erase(frontier.begin() + at);
      continue;
    }
    std::uniform_int_distribution<std::size_t> fpick(0, fresh.size() - 1);
    const int h = fresh[fpick(rng)];
    mask[h] = 1;
    ++grown;
    frontier.push_back(h);
  }
  return mask;
}

inline DomainPtr random_domain(int max_side, std::mt19937_64& rng,
                               bool allow_1d = true) {
  std::uniform_int_distribution<int> side(1, max_side);
  std::uniform_int_distribution<int> dimpick(allow_1d ? 1 : 2, 2);
  DomainSpec spec;
  spec.dim = dimpick(rng);
  spec.nx = side(rng);
  spec.ny = spec.dim == 2 ? side(rng) : 1;
  spec.spacing = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
  if (spec.dim == 2) spec.mask = random_connected_mask(spec.nx, spec.ny, rng);
  std::uniform_real_distribution<double> wa(0.1, 3.0), wb(0.0, 2.0);
  const int n = spec.nx * spec.ny;
  spec.a.resize(n);
  spec.b.resize(n);
  double sum_b = 0.0;
  for (int g = 0; g < n; ++g) {
    spec.a[g] = wa(rng);
    spec.b[g] = wb(rng);
    const bool in = spec.mask.empty() || spec.mask[g];
    if (in) sum_b += spec.b[g];
  }
  if (sum_b == 0.0)
    for (int g = 0; g < n; ++g) spec.b[g] = 1.0;
  return cheegerlab::build_domain(spec);
}

}  // namespace testutil
