#pragma once

// Limit theorems as executable sweeps: the s->1 comparison against the local
// energy, the s->0 comparison against (4/p)||u||_p^p, Dirichlet solution
// stability along s_k -> s_0, and ground-state level convergence.

#include <vector>

#include "anisofrac/solver.hpp"
#include "anisofrac/table.hpp"

namespace afs {

// rows compare J^i_{s,p}(u) with the s=1 branch value; s_list increasing in (0,1)
SweepTable bbm_sweep(const GridFunction& u, int axis, double p,
                     const std::vector<double>& s_list, const QuadratureSpec& quad);

// rows compare J^i_{s,p}(u) with (4/p)||u||_p^p; s_list decreasing toward 0
SweepTable ms_sweep(const GridFunction& u, int axis, double p,
                    const std::vector<double>& s_list, const QuadratureSpec& quad);

struct StabilitySweepResult {
  SweepTable table;
  SolveResult limit;                // the s_0 solve
  std::vector<SolveResult> members;
};

// Solves the fixed-source problem for every member of s_sequence plus the
// limit params; rows report ||u_k - u_0||_{p_min} (value), J_{s_k}(u_k) (near),
// J_{s_0}(u_0) (mid) and the liminf margin J_{s_0}(u_0) - J_{s_k}(u_k) (tail).
StabilitySweepResult stability_sweep(const std::vector<AnisoParams>& s_sequence,
                                     const AnisoParams& limit_params, const GridFunction& f,
                                     const QuadratureSpec& quad, const SolveOptions& opts);

struct GroundStateSweepResult {
  SweepTable table;
  GroundStateResult limit;
  std::vector<GroundStateResult> members;
};

// Rows report c_{s_k} (value) vs c_{s_0} (reference), J_{s_k}(u_k) (near),
// the Nehari residual (mid) and ||u_k - u_0||_r (tail).
GroundStateSweepResult ground_state_sweep(const std::vector<AnisoParams>& s_sequence,
                                          const AnisoParams& limit_params, const GridSpec& spec,
                                          const Nonlinearity& nl, const QuadratureSpec& quad,
                                          const SolveOptions& opts, double distance_r);

}  // namespace afs
