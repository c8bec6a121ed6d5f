#pragma once

// Regularization and truncation of grid functions.

#include "anisofrac/grid.hpp"

namespace afs {

// Discrete convolution with the tensor triangular kernel of the given cell
// radius (1-D weights (r+1-|k|)/(r+1)^2, mass one, symmetric, nonnegative).
// Requires radius <= margin on every axis and a support at distance >= radius
// from the margin so the result still vanishes on margin cells.
GridFunction mollify(const GridFunction& u, int radius);

// Pointwise multiply by the radial cutoff eta_k(x) = clamp(2 - |x|/k, 0, 1)
// (eta_k = 1 on the ball of radius k, 0 outside radius 2k, Lipschitz 1/k).
GridFunction truncate(const GridFunction& u, double k);

// Constant in the truncation bound J(truncate(u,k)) <= C(p) (J(u) + ||u||_p^p):
// C(p) = 2^{p-1} (1 + 2^{p+1}/p + 2^p/p), k-independent.
double truncation_constant(double p);

}  // namespace afs
