#pragma once

// Directional difference profiles. P[m] is the exact discrete value of
// F_i(m dx) = sum |u(x + m dx e_i) - u(x)|^p vol; between integer shifts the
// profile is interpolated linearly in h, which keeps it symmetric in h -> -h,
// exact at integer shifts, and exactly 2 ||u||_p^p past the support diameter.
// Below dx the profile carries a two-term split F ~ alpha h^p + beta h fitted
// from (P1, P2): beta vanishes (to O(dx^2)) for smooth data, recovering the
// slope-sum power model alpha = P1/dx^p, while jump-like data lands on the
// linear branch and keeps the near-field integral exact.

#include <vector>

#include "anisofrac/grid.hpp"
#include "anisofrac/kernels.hpp"

namespace afs {

enum class NearBranch { PowerOnly, LinearOnly, TwoTerm };

struct ShiftProfile {
  int axis = 0;
  double p = 2.0;
  double eps = 0.0;
  double dx = 0.0;
  double norm_pp = 0.0;    // sum phi(u) vol (nodal ||u||_p^p when eps = 0)
  int disjoint_shift = 1;  // m with guaranteed support disjointness
  std::vector<double> P;   // P[0..max_shift]

  NearBranch branch = NearBranch::PowerOnly;
  double alpha = 0.0;  // h^p coefficient on [0, dx]
  double beta = 0.0;   // h coefficient on [0, dx]

  int max_shift() const { return static_cast<int>(P.size()) - 1; }
  // interpolated profile at arbitrary h (symmetric in sign)
  double eval(double h) const;
};

ShiftProfile build_shift_profile(const GridFunction& u, int axis, double p, int max_shift,
                                 double eps = 0.0, bool parallel = true);

}  // namespace afs
