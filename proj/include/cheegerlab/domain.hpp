#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cheegerlab/errors.hpp"

namespace cheegerlab {

// Neighbor system used for perimeters and gradient energies.
//  L1        : axis neighbors, unit crossing weights (exact Manhattan perimeter).
//  CroftonC8 : axis + diagonal neighbors with Cauchy-Crofton crossing weights
//              pi/8 and pi/(8*sqrt(2)) for near-Euclidean perimeters (2D only).
enum class Stencil { L1, CroftonC8 };

// Discretization input. Cell-centered uniform grid, row-major storage
// (flat index = j*nx + i), cell (i,j) centered at ((i+0.5)*dx, (j+0.5)*dx).
struct DomainSpec {
  int dim = 1;
  int nx = 0;
  int ny = 1;                      // 1 in 1D
  double spacing = 0.0;
  Stencil stencil = Stencil::L1;
  std::vector<std::uint8_t> mask;  // empty = every cell inside
  std::vector<double> a;           // weight a sampled at cell centers
  std::vector<double> b;           // weight b sampled at cell centers
  double mu = 0.0;                 // declared lower bound on a; 0 = use min(a)
};

// One oriented face between a cell and a stencil neighbor (or the exterior).
// `cur`/`next` are compact cell indices, -1 for ghost cells with value 0.
// The forward difference (u[next]-u[cur])/len is the gradient across the face.
struct Face {
  int cur = -1;
  int next = -1;
  double a_face = 0.0;   // mean of adjacent a values; inside value at the boundary
  double len = 0.0;      // center-to-center distance
  double cut_w = 0.0;    // perimeter weight per unit a: omega_d * dx^(dim-1)
  double measure = 0.0;  // volume measure of the face: cut_w * len
};

class WeightedDomain;
using DomainPtr = std::shared_ptr<const WeightedDomain>;

// Immutable weighted grid. Safe to share between threads; all operations on
// it are pure functions of their inputs.
class WeightedDomain {
 public:
  int dim() const { return dim_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double spacing() const { return dx_; }
  Stencil stencil() const { return stencil_; }
  double mu() const { return mu_; }

  int grid_size() const { return nx_ * ny_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  double cell_volume() const { return cell_vol_; }

  bool inside(int gi) const { return mask_[gi] != 0; }
  // Compact index of a grid cell, -1 outside the mask.
  int compact(int gi) const { return compact_[gi]; }
  // Grid index of a compact cell.
  int grid_of(int ci) const { return cells_[ci]; }

  const std::vector<std::uint8_t>& mask() const { return mask_; }
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }
  const std::vector<Face>& faces() const { return faces_; }

  // a/b restricted to compact cells.
  double a_cell(int ci) const { return a_[cells_[ci]]; }
  double b_cell(int ci) const { return b_[cells_[ci]]; }

  double center_x(int gi) const { return (gi % nx_ + 0.5) * dx_; }
  double center_y(int gi) const { return (gi / nx_ + 0.5) * dx_; }

  double total_b_volume() const { return total_b_vol_; }

  // Same grid, mask and stencil; weights may differ.
  bool same_layout(const WeightedDomain& other) const;

  friend DomainPtr build_domain(const DomainSpec& spec);

 private:
  WeightedDomain() = default;

  int dim_ = 1, nx_ = 0, ny_ = 1;
  double dx_ = 0.0;
  Stencil stencil_ = Stencil::L1;
  double mu_ = 0.0;
  double cell_vol_ = 0.0;
  double total_b_vol_ = 0.0;
  std::vector<std::uint8_t> mask_;
  std::vector<double> a_, b_;
  std::vector<int> compact_;  // grid -> compact, -1 outside
  std::vector<int> cells_;    // compact -> grid
  std::vector<Face> faces_;
};

// Validates the spec and precomputes the face list. Violations raise; nothing
// is clamped silently.
DomainPtr build_domain(const DomainSpec& spec);

// Real value per cell, zero outside the mask (Dirichlet extension by zero).
class ScalarField {
 public:
  ScalarField() = default;
  // `grid_values` indexed over the full grid; entries outside the mask are
  // forced to zero. Non-finite entries raise NegativeField/NonFiniteWeight.
  ScalarField(DomainPtr dom, std::vector<double> grid_values);

  static ScalarField zeros(DomainPtr dom);

  const DomainPtr& domain() const { return dom_; }
  const std::vector<double>& values() const { return v_; }
  double operator[](int gi) const { return v_[gi]; }

  double max_abs() const;

 private:
  DomainPtr dom_;
  std::vector<double> v_;
};

// Subset of the domain mask.
class SetMask {
 public:
  SetMask() = default;
  // Entries outside the domain mask must be false.
  SetMask(DomainPtr dom, std::vector<std::uint8_t> sel);

  static SetMask empty(DomainPtr dom);
  static SetMask full(DomainPtr dom);

  const DomainPtr& domain() const { return dom_; }
  const std::vector<std::uint8_t>& values() const { return sel_; }
  bool contains(int gi) const { return sel_[gi] != 0; }
  int count() const;

 private:
  DomainPtr dom_;
  std::vector<std::uint8_t> sel_;
};

// One real value per oriented face of the domain.
class VectorField {
 public:
  VectorField() = default;
  VectorField(DomainPtr dom, std::vector<double> face_values);

  static VectorField zeros(DomainPtr dom);

  const DomainPtr& domain() const { return dom_; }
  const std::vector<double>& values() const { return v_; }
  double operator[](std::size_t f) const { return v_[f]; }

 private:
  DomainPtr dom_;
  std::vector<double> v_;
};

// Forward difference across each face, (u_next - u_cur)/len, ghost value 0.
VectorField gradient(const ScalarField& u);

// Negative adjoint of gradient: <gradient(u),z>_faces = -<u,divergence(z)>_cells
// exactly, for all u. Discrete stand-in for the weighted Green formula.
ScalarField divergence(const VectorField& z);

// Weighted total variation including the Dirichlet boundary term: exterior
// faces contribute a*|u| (the trace term).
double weighted_tv(const ScalarField& u);

// P_a(E, R^N) = weighted_tv(chi_E); includes the boundary contribution for
// cells of E touching the domain boundary.
double weighted_perimeter(const SetMask& E);

// Integral of b over E: sum of b * dx^dim.
double weighted_volume(const SetMask& E);

struct CoareaLevel {
  double threshold;  // lower edge of the level interval
  SetMask set;       // {u > threshold}
  double dt;         // width of the level interval
};

// Exact decomposition at the sorted distinct values of u >= 0:
// sum_k P_a(level_k.set) * level_k.dt == weighted_tv(u).
std::vector<CoareaLevel> coarea_decompose(const ScalarField& u);

// Inner products pairing gradient/divergence (cell measure dx^dim, face
// measure Face::measure).
double cell_inner(const ScalarField& u, const ScalarField& v);
double face_inner(const VectorField& y, const VectorField& z);

}  // namespace cheegerlab
