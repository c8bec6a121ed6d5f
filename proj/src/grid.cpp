#include "anisofrac/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "anisofrac/reduce.hpp"
#include "json.hpp"

namespace afs {

void GridSpec::validate() const {
  if (dim < 1) throw std::invalid_argument("grid.dim must be >= 1");
  auto need = [&](std::size_t n, const char* name) {
    if (static_cast<int>(n) != dim)
      throw std::invalid_argument(std::string("grid.") + name + " must have dim entries");
  };
  need(lo.size(), "bounds");
  need(hi.size(), "bounds");
  need(cells.size(), "cells");
  need(margin.size(), "margin");
  for (int a = 0; a < dim; ++a) {
    if (!(hi[a] > lo[a]))
      throw std::invalid_argument("grid.bounds[" + std::to_string(a) + "]: upper must exceed lower");
    if (cells[a] < 2)
      throw std::invalid_argument("grid.cells[" + std::to_string(a) + "] must be >= 2");
    if (margin[a] < 1)
      throw std::invalid_argument("grid.margin[" + std::to_string(a) + "] must be >= 1");
    if (2 * margin[a] >= cells[a])
      throw std::invalid_argument("grid.margin[" + std::to_string(a) + "] leaves no interior cells");
  }
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= spacing(a);
  return v;
}

std::size_t GridSpec::total_nodes() const {
  std::size_t n = 1;
  for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(cells[a]);
  return n;
}

std::vector<std::size_t> GridSpec::strides() const {
  std::vector<std::size_t> st(dim);
  std::size_t s = 1;
  for (int a = dim - 1; a >= 0; --a) {
    st[a] = s;
    s *= static_cast<std::size_t>(cells[a]);
  }
  return st;
}

bool GridSpec::operator==(const GridSpec& o) const {
  return dim == o.dim && lo == o.lo && hi == o.hi && cells == o.cells && margin == o.margin;
}

GridFunction::GridFunction(const GridSpec& s) : spec(s), values(s.total_nodes(), 0.0) {
  spec.validate();
}

bool GridFunction::is_margin(std::size_t flat) const {
  for (int a = spec.dim - 1; a >= 0; --a) {
    const std::size_t n = static_cast<std::size_t>(spec.cells[a]);
    const std::size_t i = flat % n;
    flat /= n;
    if (i < static_cast<std::size_t>(spec.margin[a]) ||
        i >= n - static_cast<std::size_t>(spec.margin[a]))
      return true;
  }
  return false;
}

void GridFunction::check_invariants(double tol) const {
  if (values.size() != spec.total_nodes())
    throw std::invalid_argument("grid function storage does not match spec");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw std::invalid_argument("grid function has non-finite value at node " + std::to_string(i));
    if (std::abs(values[i]) > tol && is_margin(i))
      throw std::invalid_argument("grid function is nonzero on a margin cell (node " +
                                  std::to_string(i) + ")");
  }
}

void GridFunction::zero_margin() {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (is_margin(i)) values[i] = 0.0;
}

bool GridFunction::support_range(int axis, int& first, int& last) const {
  const auto st = spec.strides();
  const std::size_t n = values.size();
  const std::size_t stride = st[axis];
  const std::size_t extent = static_cast<std::size_t>(spec.cells[axis]);
  first = spec.cells[axis];
  last = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] != 0.0) {
      const int idx = static_cast<int>((i / stride) % extent);
      if (idx < first) first = idx;
      if (idx > last) last = idx;
    }
  }
  return last >= first && last >= 0;
}

GridSpec aligned_grid(int dim, double a, double b, int cells_inside, int margin) {
  const double h = (b - a) / cells_inside;
  GridSpec g;
  g.dim = dim;
  // nodes at a, a+h, ..., b; margin extra zero nodes beyond each end
  const double lo = a - (margin - 0.5) * h;
  const double hi = b + (margin - 0.5) * h;
  const int cells = cells_inside + 2 * margin - 1;
  g.lo.assign(dim, lo);
  g.hi.assign(dim, hi);
  g.cells.assign(dim, cells);
  g.margin.assign(dim, margin);
  g.validate();
  return g;
}

double lp_norm_pow(const GridFunction& u, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("lp_norm: p must be > 1");
  const double vol = u.spec.cell_volume();
  const double* v = u.values.data();
  if (p == 2.0)
    return det_sum(u.values.size(), [v](std::size_t i) { return v[i] * v[i]; }) * vol;
  return det_sum(u.values.size(),
                 [v, p](std::size_t i) { return std::pow(std::abs(v[i]), p); }) *
         vol;
}

double lp_norm(const GridFunction& u, double p) { return std::pow(lp_norm_pow(u, p), 1.0 / p); }

double inner(const GridFunction& a, const GridFunction& b) {
  if (!(a.spec == b.spec)) throw std::invalid_argument("inner: grid mismatch");
  const double* x = a.values.data();
  const double* y = b.values.data();
  return det_sum(a.values.size(), [x, y](std::size_t i) { return x[i] * y[i]; }) *
         a.spec.cell_volume();
}

double max_abs(const GridFunction& u) {
  double m = 0.0;
  for (double v : u.values) m = std::max(m, std::abs(v));
  return m;
}

void write_grid_csv(const GridFunction& u, const std::string& path) {
  nlohmann::json hdr;
  hdr["dim"] = u.spec.dim;
  auto& bounds = hdr["bounds"] = nlohmann::json::array();
  for (int a = 0; a < u.spec.dim; ++a) bounds.push_back({u.spec.lo[a], u.spec.hi[a]});
  hdr["cells"] = u.spec.cells;
  hdr["margin"] = u.spec.margin;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << hdr.dump() << "\n";
  char buf[64];
  for (double v : u.values) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

GridFunction read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty grid file: " + path);
  const auto hdr = nlohmann::json::parse(line);
  GridSpec spec;
  spec.dim = hdr.at("dim").get<int>();
  for (const auto& b : hdr.at("bounds")) {
    spec.lo.push_back(b.at(0).get<double>());
    spec.hi.push_back(b.at(1).get<double>());
  }
  spec.cells = hdr.at("cells").get<std::vector<int>>();
  spec.margin = hdr.at("margin").get<std::vector<int>>();
  GridFunction u(spec);
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("grid file truncated: " + path);
    u.values[i] = std::stod(line);
  }
  return u;
}

}  // namespace afs
