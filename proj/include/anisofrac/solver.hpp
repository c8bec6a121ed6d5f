#pragma once

// Energy-minimization solvers: the strictly convex Dirichlet problem
// (fixed source) and the Nehari-manifold ground-state search.

#include <map>
#include <string>
#include <vector>

#include "anisofrac/nonlinearity.hpp"
#include "anisofrac/operators.hpp"

namespace afs {

enum class StepRule { Fixed, BarzilaiBorwein };

struct SolveOptions {
  int max_iter = 2000;
  double grad_tol = 1e-8;  // relative to the first iterate's gradient norm
  StepRule step_rule = StepRule::BarzilaiBorwein;
  double fixed_step = 0.0;  // required when step_rule == Fixed
  double armijo = 1e-4;
  int max_backtracks = 60;
  unsigned long long seed = 0;

  // initialization
  double init_amplitude = 0.0;   // dirichlet: scale of the seeded random start (0 = zero start)
  double bump_width_frac = 0.5;  // ground state: bump width as a fraction of the domain
  double bump_amplitude = 1.0;
  double perturb = 0.0;          // ground state: relative seeded perturbation of the bump

  void validate() const;
};

struct SolveResult {
  GridFunction u;
  double energy = 0.0;    // I(u)
  double residual = 0.0;  // discrete L2 norm of the Euler-Lagrange residual
  int iterations = 0;
  bool converged = false;
  std::map<std::string, double> metadata;  // eps per axis, res0, timings, monotone flag
};

struct GroundStateResult {
  GridFunction u;
  double level = 0.0;            // c_s = I(u)
  double nehari_residual = 0.0;  // |<I'(u), u>|
  double residual = 0.0;
  EnergyBreakdown energy_parts;
  int iterations = 0;
  bool converged = false;
  std::map<std::string, double> metadata;
};

// Minimizes I(v) = J_{s,p}(v) - sum f v vol over functions vanishing outside
// the non-margin region. Requires p_max < p* (supercritical p* reads as +inf)
// and f supported in the domain.
SolveResult solve_dirichlet(const GridFunction& f, const AnisoParams& params,
                            const QuadratureSpec& quad, const SolveOptions& opts);

// Unique t > 0 with t u on the Nehari manifold: sum_i t^{p_i-1} J^i(u) =
// t^{q-1} integral a |u|^q. Closed form for equal p_i, bracketed bisection
// otherwise. Throws for u == 0 or when no root is bracketed in [1e-12, 1e12].
double nehari_scale(const GridFunction& u, const AnisoParams& params, const Nonlinearity& nl,
                    const QuadratureSpec& quad);

// Projected descent for I(v) = J_{s,p}(v) - integral F(x, v): gradient step,
// rescale onto the manifold, Armijo on the manifold energies. The result is a
// critical-point candidate certified by necessary conditions only.
GroundStateResult ground_state(const GridSpec& spec, const AnisoParams& params,
                               const Nonlinearity& nl, const QuadratureSpec& quad,
                               const SolveOptions& opts);

}  // namespace afs
