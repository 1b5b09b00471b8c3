#include "cheegerlab/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <set>

namespace cheegerlab {

namespace {

struct Dir {
  int dx;
  int dy;
  double omega;  // crossing weight
};

std::vector<Dir> stencil_dirs(int dim, Stencil st) {
  if (dim == 1) return {{1, 0, 1.0}};
  if (st == Stencil::L1) return {{1, 0, 1.0}, {0, 1, 1.0}};
  const double w_axis = std::numbers::pi / 8.0;
  const double w_diag = std::numbers::pi / (8.0 * std::numbers::sqrt2);
  return {{1, 0, w_axis}, {0, 1, w_axis}, {1, 1, w_diag}, {1, -1, w_diag}};
}

void check_connected(int nx, int ny, const std::vector<std::uint8_t>& mask) {
  const int n = nx * ny;
  int start = -1;
  int inside = 0;
  for (int g = 0; g < n; ++g) {
    if (mask[g]) {
      if (start < 0) start = g;
      ++inside;
    }
  }
  std::vector<std::uint8_t> seen(n, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int g = q.front();
    q.pop();
    const int i = g % nx, j = g / nx;
    const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
    for (auto& c : nb) {
      if (c[0] < 0 || c[0] >= nx || c[1] < 0 || c[1] >= ny) continue;
      const int h = c[1] * nx + c[0];
      if (mask[h] && !seen[h]) {
        seen[h] = 1;
        ++reached;
        q.push(h);
      }
    }
  }
  if (reached != inside)
    throw DisconnectedMask("domain mask is not a connected set of cells");
}

}  // namespace

bool WeightedDomain::same_layout(const WeightedDomain& other) const {
  return dim_ == other.dim_ && nx_ == other.nx_ && ny_ == other.ny_ &&
         dx_ == other.dx_ && stencil_ == other.stencil_ &&
         mask_ == other.mask_;
}

DomainPtr build_domain(const DomainSpec& spec) {
  if (spec.dim != 1 && spec.dim != 2)
    throw ValidationError("dim must be 1 or 2");
  if (spec.nx <= 0 || spec.ny <= 0)
    throw ValidationError("grid shape must be positive");
  if (spec.dim == 1 && spec.ny != 1)
    throw ValidationError("1D domains take ny = 1");
  if (!(spec.spacing > 0.0) || !std::isfinite(spec.spacing))
    throw ValidationError("spacing must be positive and finite");
  if (spec.dim == 1 && spec.stencil == Stencil::CroftonC8)
    throw ValidationError("CroftonC8 stencil requires dim 2");

  const int n = spec.nx * spec.ny;
  if (spec.a.size() != static_cast<std::size_t>(n) ||
      spec.b.size() != static_cast<std::size_t>(n))
    throw ValidationError("weight fields must have one value per cell");

  std::vector<std::uint8_t> mask = spec.mask;
  if (mask.empty()) mask.assign(n, 1);
  if (mask.size() != static_cast<std::size_t>(n))
    throw ValidationError("mask must have one value per cell");

  bool any_inside = false;
  for (int g = 0; g < n; ++g) any_inside = any_inside || mask[g];
  if (!any_inside) throw EmptyDomain("mask excludes every cell");
  check_connected(spec.nx, spec.ny, mask);

  double min_a = std::numeric_limits<double>::infinity();
  double sum_b = 0.0;
  for (int g = 0; g < n; ++g) {
    if (!mask[g]) continue;
    if (!std::isfinite(spec.a[g]) || !std::isfinite(spec.b[g]))
      throw NonFiniteWeight("weight evaluates to a non-finite value");
    min_a = std::min(min_a, spec.a[g]);
    if (spec.b[g] < 0.0) throw NegativeWeightB("weight b is negative");
    sum_b += spec.b[g];
  }
  if (!(min_a > 0.0)) throw NonPositiveWeightA("min(a) <= 0 on the mask");
  if (!(sum_b > 0.0)) throw ZeroMassB("weight b vanishes identically");

  double mu = spec.mu;
  if (mu == 0.0) {
    mu = min_a;
  } else {
    if (!(mu > 0.0)) throw ValidationError("declared mu must be positive");
    if (min_a < mu)
      throw NonPositiveWeightA("min(a) falls below the declared mu");
  }

  auto dom = std::shared_ptr<WeightedDomain>(new WeightedDomain());
  dom->dim_ = spec.dim;
  dom->nx_ = spec.nx;
  dom->ny_ = spec.ny;
  dom->dx_ = spec.spacing;
  dom->stencil_ = spec.stencil;
  dom->mu_ = mu;
  dom->cell_vol_ = std::pow(spec.spacing, spec.dim);
  dom->mask_ = std::move(mask);
  dom->a_ = spec.a;
  dom->b_ = spec.b;

  dom->compact_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (dom->mask_[g]) {
      dom->compact_[g] = static_cast<int>(dom->cells_.size());
      dom->cells_.push_back(g);
    }
  }
  dom->total_b_vol_ = sum_b * dom->cell_vol_;

  // Enumerate faces direction by direction, row-major, so that the 1D face
  // list reads left to right including both exterior faces.
  const double face_area = std::pow(spec.spacing, spec.dim - 1);
  for (const Dir& d : stencil_dirs(spec.dim, spec.stencil)) {
    const double len =
        spec.spacing * std::sqrt(static_cast<double>(d.dx * d.dx + d.dy * d.dy));
    const double cut_w = d.omega * face_area;
    const int j_lo = std::min(0, -d.dy), j_hi = spec.ny - std::max(0, d.dy);
    for (int j = j_lo; j <= j_hi; ++j) {
      for (int i = -1; i <= spec.nx; ++i) {
        const int i2 = i + d.dx, j2 = j + d.dy;
        const bool in1 = i >= 0 && i < spec.nx && j >= 0 && j < spec.ny &&
                         dom->mask_[j * spec.nx + i];
        const bool in2 = i2 >= 0 && i2 < spec.nx && j2 >= 0 && j2 < spec.ny &&
                         dom->mask_[j2 * spec.nx + i2];
        if (!in1 && !in2) continue;
        Face f;
        f.cur = in1 ? dom->compact_[j * spec.nx + i] : -1;
        f.next = in2 ? dom->compact_[j2 * spec.nx + i2] : -1;
        const double a1 = in1 ? spec.a[j * spec.nx + i] : 0.0;
        const double a2 = in2 ? spec.a[j2 * spec.nx + i2] : 0.0;
        f.a_face = (in1 && in2) ? 0.5 * (a1 + a2) : (in1 ? a1 : a2);
        f.len = len;
        f.cut_w = cut_w;
        f.measure = cut_w * len;
        dom->faces_.push_back(f);
      }
    }
  }
  return dom;
}

ScalarField::ScalarField(DomainPtr dom, std::vector<double> grid_values)
    : dom_(std::move(dom)), v_(std::move(grid_values)) {
  if (!dom_ || v_.size() != static_cast<std::size_t>(dom_->grid_size()))
    throw DomainMismatch("scalar field does not conform to the domain grid");
  for (int g = 0; g < dom_->grid_size(); ++g) {
    if (!dom_->inside(g)) {
      v_[g] = 0.0;
    } else if (!std::isfinite(v_[g])) {
      throw NonFiniteWeight("scalar field has a non-finite value");
    }
  }
}

ScalarField ScalarField::zeros(DomainPtr dom) {
  const int n = dom->grid_size();
  return ScalarField(std::move(dom), std::vector<double>(n, 0.0));
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::fabs(x));
  return m;
}

SetMask::SetMask(DomainPtr dom, std::vector<std::uint8_t> sel)
    : dom_(std::move(dom)), sel_(std::move(sel)) {
  if (!dom_ || sel_.size() != static_cast<std::size_t>(dom_->grid_size()))
    throw DomainMismatch("set mask does not conform to the domain grid");
  for (int g = 0; g < dom_->grid_size(); ++g)
    if (sel_[g] && !dom_->inside(g))
      throw ValidationError("set mask selects a cell outside the domain");
}

SetMask SetMask::empty(DomainPtr dom) {
  const int n = dom->grid_size();
  return SetMask(std::move(dom), std::vector<std::uint8_t>(n, 0));
}

SetMask SetMask::full(DomainPtr dom) {
  std::vector<std::uint8_t> sel = dom->mask();
  return SetMask(std::move(dom), std::move(sel));
}

int SetMask::count() const {
  int c = 0;
  for (auto s : sel_) c += s != 0;
  return c;
}

VectorField::VectorField(DomainPtr dom, std::vector<double> face_values)
    : dom_(std::move(dom)), v_(std::move(face_values)) {
  if (!dom_ || v_.size() != dom_->faces().size())
    throw DomainMismatch("vector field does not conform to the face set");
  for (double x : v_)
    if (!std::isfinite(x))
      throw NonFiniteWeight("vector field has a non-finite value");
}

VectorField VectorField::zeros(DomainPtr dom) {
  const std::size_t nf = dom->faces().size();
  return VectorField(std::move(dom), std::vector<double>(nf, 0.0));
}

VectorField gradient(const ScalarField& u) {
  const auto& dom = *u.domain();
  std::vector<double> g(dom.faces().size());
  for (std::size_t f = 0; f < dom.faces().size(); ++f) {
    const Face& fc = dom.faces()[f];
    const double ucur = fc.cur >= 0 ? u[dom.grid_of(fc.cur)] : 0.0;
    const double unext = fc.next >= 0 ? u[dom.grid_of(fc.next)] : 0.0;
    g[f] = (unext - ucur) / fc.len;
  }
  return VectorField(u.domain(), std::move(g));
}

ScalarField divergence(const VectorField& z) {
  const auto& dom = *z.domain();
  std::vector<double> out(dom.grid_size(), 0.0);
  const double inv_vol = 1.0 / dom.cell_volume();
  for (std::size_t f = 0; f < dom.faces().size(); ++f) {
    const Face& fc = dom.faces()[f];
    const double flux = z[f] * fc.measure / fc.len * inv_vol;
    if (fc.cur >= 0) out[dom.grid_of(fc.cur)] += flux;
    if (fc.next >= 0) out[dom.grid_of(fc.next)] -= flux;
  }
  return ScalarField(z.domain(), std::move(out));
}

double weighted_tv(const ScalarField& u) {
  const auto& dom = *u.domain();
  double tv = 0.0;
  for (const Face& fc : dom.faces()) {
    const double ucur = fc.cur >= 0 ? u[dom.grid_of(fc.cur)] : 0.0;
    const double unext = fc.next >= 0 ? u[dom.grid_of(fc.next)] : 0.0;
    tv += fc.a_face * std::fabs(unext - ucur) * fc.cut_w;
  }
  return tv;
}

double weighted_perimeter(const SetMask& E) {
  const auto& dom = *E.domain();
  double p = 0.0;
  for (const Face& fc : dom.faces()) {
    const bool in1 = fc.cur >= 0 && E.contains(dom.grid_of(fc.cur));
    const bool in2 = fc.next >= 0 && E.contains(dom.grid_of(fc.next));
    if (in1 != in2) p += fc.a_face * fc.cut_w;
  }
  return p;
}

double weighted_volume(const SetMask& E) {
  const auto& dom = *E.domain();
  double v = 0.0;
  for (int g = 0; g < dom.grid_size(); ++g)
    if (E.contains(g)) v += dom.b()[g];
  return v * dom.cell_volume();
}

std::vector<CoareaLevel> coarea_decompose(const ScalarField& u) {
  const auto& dom = *u.domain();
  std::set<double> levels;
  for (int g = 0; g < dom.grid_size(); ++g) {
    if (!dom.inside(g)) continue;
    if (u[g] < 0.0) throw NegativeField("coarea requires u >= 0");
    if (u[g] > 0.0) levels.insert(u[g]);
  }
  std::vector<CoareaLevel> out;
  double prev = 0.0;
  for (double t : levels) {
    std::vector<std::uint8_t> sel(dom.grid_size(), 0);
    for (int g = 0; g < dom.grid_size(); ++g)
      sel[g] = dom.inside(g) && u[g] > prev;
    out.push_back({prev, SetMask(u.domain(), std::move(sel)), t - prev});
    prev = t;
  }
  return out;
}

double cell_inner(const ScalarField& u, const ScalarField& v) {
  const auto& dom = *u.domain();
  if (!v.domain() || !dom.same_layout(*v.domain()))
    throw DomainMismatch("cell_inner requires matching domains");
  double s = 0.0;
  for (int c = 0; c < dom.cell_count(); ++c) {
    const int g = dom.grid_of(c);
    s += u[g] * v[g];
  }
  return s * dom.cell_volume();
}

double face_inner(const VectorField& y, const VectorField& z) {
  const auto& dom = *y.domain();
  if (!z.domain() || !dom.same_layout(*z.domain()))
    throw DomainMismatch("face_inner requires matching domains");
  double s = 0.0;
  for (std::size_t f = 0; f < dom.faces().size(); ++f)
    s += y[f] * z[f] * dom.faces()[f].measure;
  return s;
}

}  // namespace cheegerlab
