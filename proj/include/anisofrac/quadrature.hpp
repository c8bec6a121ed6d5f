#pragma once

// Controls for the singular h-integral of the directional energies: an
// analytic near field below near_cut*dx, Gauss-Legendre panels on a geometric
// h-grid in the mid field, and an analytic tail beyond tail_cut.

#include <vector>

namespace afs {

struct QuadratureSpec {
  double near_cut = 1.0;       // in (0, 1], units of dx
  double ratio = 1.05;         // geometric growth of the mid-field grid, > 1
  int nodes_per_interval = 3;  // Gauss-Legendre nodes per panel, 1..6
  double tail_cut = 0.0;       // absolute H; 0 = auto (domain extent + box length)

  void validate() const;
  // resolved tail cut for a given axis geometry
  double resolve_tail(double domain_extent, double box_length) const;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};
const GaussRule& gauss_rule(int n);

struct EnergyBreakdown {
  std::vector<double> per_direction;                // J^i values
  std::vector<double> near_part, mid_part, tail_part;  // diagnostics per direction
  double total = 0.0;                               // sum (1/p_i) per_direction[i]
};

}  // namespace afs
