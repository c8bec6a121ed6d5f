#pragma once

// Exact derivatives of the discretized energies: the directional pairing
// <(J^i)'(u), v>, the Riesz representative of the total-energy derivative
// (the discrete pseudo anisotropic p-Laplacian), and residuals of the
// Euler-Lagrange systems. Everything differentiates the discretization, so
// gradient checks hold to roundoff.

#include <vector>

#include "anisofrac/energy.hpp"
#include "anisofrac/nonlinearity.hpp"

namespace afs {

// |t|^{p-2} t is not Lipschitz at 0 for p < 2; the operator then uses
// (t^2 + eps^2)^{(p-2)/2} t with eps = rel * (data scale), recorded in
// solver metadata. p >= 2 keeps eps = 0.
double default_epsilon(double p, double data_scale, double rel = 1e-8);

// <(J^i_{s,p})'(u), v> for the discretized energy (s = 1 uses the local stencil)
double gateaux_energy(const GridFunction& u, const GridFunction& v, int axis, double s, double p,
                      const QuadratureSpec& quad, double eps = 0.0);

// Riesz representative g of (J_{s,p})'(u): sum g v vol = <J'(u), v> for every
// v vanishing outside the non-margin region; g is zero on margin cells.
GridFunction energy_gradient(const GridFunction& u, const AnisoParams& params,
                             const QuadratureSpec& quad,
                             const std::vector<double>* eps_per_axis = nullptr);

// discrete L2 norm of energy_gradient(u) - f   (fixed source)
double residual(const GridFunction& u, const AnisoParams& params, const GridFunction& f,
                const QuadratureSpec& quad, const std::vector<double>* eps_per_axis = nullptr);
// discrete L2 norm of energy_gradient(u) - f(., u)   (semilinear source)
double residual(const GridFunction& u, const AnisoParams& params, const Nonlinearity& nl,
                const QuadratureSpec& quad, const std::vector<double>* eps_per_axis = nullptr);

}  // namespace afs
