#pragma once

// Uniform tensor grids over a box. Function values live at cell centers,
// extended by zero outside the box; the outermost `margin` cells per axis are
// guaranteed zero, and the non-margin region is the computational domain
// (homogeneous exterior condition as a plain index mask).

#include <cstddef>
#include <string>
#include <vector>

namespace afs {

struct GridSpec {
  int dim = 1;
  std::vector<double> lo, hi;  // box bounds per axis
  std::vector<int> cells;      // N_i >= 2
  std::vector<int> margin;     // >= 1 zero cells on each side, per axis

  void validate() const;  // throws std::invalid_argument naming the field

  double spacing(int axis) const { return (hi[axis] - lo[axis]) / cells[axis]; }
  double cell_volume() const;
  std::size_t total_nodes() const;
  // cell-center coordinate of index i along axis
  double node_coord(int axis, int i) const {
    return lo[axis] + (i + 0.5) * spacing(axis);
  }
  // closed box of the non-margin cells along axis
  double domain_lo(int axis) const { return lo[axis] + margin[axis] * spacing(axis); }
  double domain_hi(int axis) const { return hi[axis] - margin[axis] * spacing(axis); }

  std::vector<std::size_t> strides() const;  // row-major, last axis fastest

  bool operator==(const GridSpec& o) const;
};

struct GridFunction {
  GridSpec spec;
  std::vector<double> values;  // size == spec.total_nodes()

  GridFunction() = default;
  explicit GridFunction(const GridSpec& s);

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }

  // true if the multi-index of flat node i touches any margin cell
  bool is_margin(std::size_t flat) const;
  // throws if any margin node is nonzero or any value non-finite
  void check_invariants(double tol = 0.0) const;
  void zero_margin();
  // index range [first, last] of nodes with |u| > 0 along `axis`
  // (projected over the other axes); returns false if u == 0
  bool support_range(int axis, int& first, int& last) const;
};

// Grid whose cell centers land on the lattice {k*h} so that the nodes at
// `a` and `b` exist and fall in the margin: Dirichlet data sits exactly on
// the domain boundary. cells_inside = (b-a)/h must be integral.
GridSpec aligned_grid(int dim, double a, double b, int cells_inside, int margin);

double lp_norm(const GridFunction& u, double p);       // nodal (sum |u|^p vol)^(1/p)
double lp_norm_pow(const GridFunction& u, double p);   // sum |u|^p vol
double inner(const GridFunction& a, const GridFunction& b);  // sum a b vol
double max_abs(const GridFunction& u);

// CSV dump: first line a JSON header {dim,bounds,cells,margin}, then one
// value per row in index-major order.
void write_grid_csv(const GridFunction& u, const std::string& path);
GridFunction read_grid_csv(const std::string& path);

}  // namespace afs
