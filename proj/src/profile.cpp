#include "anisofrac/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anisofrac/reduce.hpp"

namespace afs {

double ShiftProfile::eval(double h) const {
  h = std::abs(h);
  if (h == 0.0) return 0.0;
  if (h <= dx) return alpha * std::pow(h, p) + beta * h;
  const double t = h / dx;
  const int m = static_cast<int>(t);
  const int M = max_shift();
  if (m >= M) return 2.0 * norm_pp;
  const double theta = t - m;
  return (1.0 - theta) * P[m] + theta * P[m + 1];
}

ShiftProfile build_shift_profile(const GridFunction& u, int axis, double p, int max_shift,
                                 double eps, bool parallel) {
  if (!(p > 1.0)) throw std::invalid_argument("profile: p must be > 1");
  if (max_shift < 2) throw std::invalid_argument("profile: need max_shift >= 2");
  u.spec.validate();
  if (axis < 0 || axis >= u.spec.dim) throw std::invalid_argument("profile: axis out of range");

  ShiftProfile pr;
  pr.axis = axis;
  pr.p = p;
  pr.eps = eps;
  pr.dx = u.spec.spacing(axis);
  const auto law = kernels::PowerLaw::make(p, eps);

  const double* v = u.values.data();
  pr.norm_pp = det_sum(u.values.size(), [&](std::size_t i) { return law.phi(v[i]); },
                       parallel) *
               u.spec.cell_volume();

  int first = 0, last = -1;
  if (u.support_range(axis, first, last))
    pr.disjoint_shift = last - first + 1;
  else
    pr.disjoint_shift = 1;  // u == 0: every profile value is 0 anyway

  pr.P.assign(static_cast<std::size_t>(max_shift) + 1, 0.0);
  const int m_cut = std::min(max_shift, pr.disjoint_shift);
  for (int m = 1; m <= m_cut; ++m)
    pr.P[m] = kernels::shift_power_sum(u, axis, m, law, parallel);
  for (int m = m_cut + 1; m <= max_shift; ++m) pr.P[m] = 2.0 * pr.norm_pp;

  // near-field split of P1 over [0, dx]
  const double P1 = pr.P[1], P2 = pr.P[2];
  const double dxp = std::pow(pr.dx, p);
  if (!(P1 > 0.0)) {
    pr.branch = NearBranch::PowerOnly;
    pr.alpha = pr.beta = 0.0;
  } else {
    const double D = std::pow(2.0, p) - 2.0;
    const double a = (P2 - 2.0 * P1) / (D * dxp);
    const double b = (std::pow(2.0, p) * P1 - P2) / (D * pr.dx);
    if (b < 0.0) {  // P2 > 2^p P1: only roundoff can get here
      pr.branch = NearBranch::PowerOnly;
      pr.alpha = P1 / dxp;
      pr.beta = 0.0;
    } else if (a < 0.0) {  // subadditive profile: pure first-order differences
      pr.branch = NearBranch::LinearOnly;
      pr.alpha = 0.0;
      pr.beta = P1 / pr.dx;
    } else {
      pr.branch = NearBranch::TwoTerm;
      pr.alpha = a;
      pr.beta = b;
    }
  }
  return pr;
}

}  // namespace afs
