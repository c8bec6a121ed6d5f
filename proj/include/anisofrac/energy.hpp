#pragma once

// Directional fractional energies
//   J^i_{s,p}(u) = 2 s (1-s) \int_0^inf F_i(h) h^{-1-sp} dh   (s < 1)
//   J^i_{1,p}(u) = (2/p) sum |forward difference along i|^p vol
// assembled from an analytic near field on [0, h0], Gauss-Legendre panels on
// a geometric mid-field grid evaluated through the shift profile, and the
// analytic tail 2 ||u||_p^p H^{-sp} / (sp) past the support diameter.

#include <utility>
#include <vector>

#include "anisofrac/grid.hpp"
#include "anisofrac/params.hpp"
#include "anisofrac/profile.hpp"
#include "anisofrac/quadrature.hpp"

namespace afs {

// F_i(h) = int |u(x + h e_i) - u(x)|^p dx for the grid model; symmetric in
// the sign of h, exact at integer multiples of the spacing.
double difference_profile(const GridFunction& u, int axis, double h, double p);

struct DirectionalParts {
  double value = 0.0;
  double near = 0.0, mid = 0.0, tail = 0.0;
};

// Precomputed h-quadrature for one (s, p, axis geometry); independent of u.
struct DirectionalScheme {
  double s = 0.5, p = 2.0;
  double pref = 0.0;  // 2 s (1 - s)
  double dx = 0.0, h0 = 0.0, H = 0.0;
  bool linear_term_ok = false;  // s p < 1: the h-linear near term is integrable
  double near_A = 0.0;          // int_0^h0 h^p k(h) dh = h0^{p(1-s)} / (p(1-s))
  double near_B = 0.0;          // int_0^h0 h   k(h) dh = h0^{1-sp} / (1-sp) when defined
  std::vector<std::pair<double, double>> gauss;  // (h, w * h^{-1-sp}) mid nodes
  double tail_coeff = 0.0;                       // 2 H^{-sp} / (sp)
  int max_shift = 0;                             // profile entries required
};

DirectionalScheme make_scheme(double s, double p, const GridSpec& spec, int axis,
                              const QuadratureSpec& quad);

// effective near-field coefficients of a profile under a scheme (the linear
// branch is only admissible when s p < 1)
std::pair<double, double> near_coefficients(const DirectionalScheme& sch,
                                            const ShiftProfile& pr);

DirectionalParts scheme_energy(const DirectionalScheme& sch, const ShiftProfile& pr);

// fold near + mid quadrature into per-shift weights (d energy / d P_m, before
// the 2s(1-s) prefactor); point_w carries the tail term
void scheme_weights(const DirectionalScheme& sch, const ShiftProfile& pr,
                    kernels::WeightList& W, double& point_w);

// public operations
DirectionalParts directional_energy_parts(const GridFunction& u, int axis, double s, double p,
                                          const QuadratureSpec& quad, double eps = 0.0);
double directional_energy(const GridFunction& u, int axis, double s, double p,
                          const QuadratureSpec& quad, double eps = 0.0);
EnergyBreakdown total_energy(const GridFunction& u, const AnisoParams& params,
                             const QuadratureSpec& quad,
                             const std::vector<double>* eps_override = nullptr);

// s = 1 branch: (2/p) sum of |per-cell slope|^p * vol
double local_energy(const GridFunction& u, int axis, double p, double eps = 0.0);

}  // namespace afs
