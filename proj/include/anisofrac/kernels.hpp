#pragma once

// Hot loops behind the energy machinery, each with a serial reference path
// and an OpenMP path producing bit-identical results (fixed chunk partition +
// fixed combine tree; see reduce.hpp). Tests compare the two directly.

#include <cmath>
#include <utility>
#include <vector>

#include "anisofrac/grid.hpp"

namespace afs::kernels {

// phi(t) = |t|^p and psi(t) = |t|^{p-2} t (defined as 0 at t = 0), or their
// smoothed versions phi(t) = (t^2+eps^2)^{p/2} - eps^p, psi = (t^2+eps^2)^{(p-2)/2} t.
struct PowerLaw {
  double p = 2.0;
  double eps = 0.0;
  double eps_p = 0.0;  // eps^p, cached

  static PowerLaw make(double p, double eps = 0.0) {
    PowerLaw w;
    w.p = p;
    w.eps = eps;
    w.eps_p = eps > 0.0 ? std::pow(eps, p) : 0.0;
    return w;
  }
  double phi(double t) const {
    if (eps == 0.0) {
      if (p == 2.0) return t * t;
      return std::pow(std::abs(t), p);
    }
    return std::pow(t * t + eps * eps, 0.5 * p) - eps_p;
  }
  double psi(double t) const {
    if (eps == 0.0) {
      if (p == 2.0) return t;
      if (t == 0.0) return 0.0;
      return std::pow(std::abs(t), p - 2.0) * t;
    }
    return std::pow(t * t + eps * eps, 0.5 * (p - 2.0)) * t;
  }
};

// Geometry of the lines of a grid along one axis.
struct LineSet {
  std::size_t n_lines = 0;
  std::size_t extent = 0;  // nodes per line
  std::size_t stride = 0;  // step between consecutive nodes of a line
  std::size_t block = 0;   // step between line groups (extent * stride)
  std::size_t base(std::size_t line) const {
    return (line / stride) * block + (line % stride);
  }
};
LineSet line_set(const GridSpec& spec, int axis);

// sum over all nodes (zero-extended) of phi(u(x + m dx e_axis) - u(x)) * vol
double shift_power_sum(const GridFunction& u, int axis, int m, const PowerLaw& law,
                       bool parallel = true);

// sparse per-shift weights: (m, W_m) sorted by m
using WeightList = std::vector<std::pair<int, double>>;

// g[x] += scale * [ sum_m W_m (psi(u(x)-u(x-m dx)) - psi(u(x+m dx)-u(x)))
//                   + point_w * psi(u(x)) ]
void accumulate_shift_gradient(const GridFunction& u, int axis, const WeightList& weights,
                               double point_w, const PowerLaw& law, double scale,
                               GridFunction& g, bool parallel = true);

// sum_m W_m sum_x psi(D_m u) D_m v * vol + point_w * sum_x psi(u) v * vol
double shift_pairing_sum(const GridFunction& u, const GridFunction& v, int axis,
                         const WeightList& weights, double point_w, const PowerLaw& law,
                         bool parallel = true);

}  // namespace afs::kernels
