#include "anisofrac/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anisofrac/reduce.hpp"

namespace afs {

namespace {

int required_shift(double H, double dx) {
  return static_cast<int>(std::ceil(H / dx)) + 2;
}

void check_sp(double s, double p) {
  if (!(s > 0.0) || s > 1.0) throw std::invalid_argument("s outside (0,1]");
  if (!(p > 1.0)) throw std::invalid_argument("p outside (1,inf)");
}

}  // namespace

double difference_profile(const GridFunction& u, int axis, double h, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("difference_profile: p outside (1,inf)");
  if (!(h != 0.0)) throw std::invalid_argument("difference_profile: h must be nonzero");
  const double dx = u.spec.spacing(axis);
  const int need = static_cast<int>(std::ceil(std::abs(h) / dx)) + 2;
  const auto pr = build_shift_profile(u, axis, p, std::max(need, 2));
  return pr.eval(h);
}

double local_energy(const GridFunction& u, int axis, double p, double eps) {
  const auto law = kernels::PowerLaw::make(p, eps);
  const double P1 = kernels::shift_power_sum(u, axis, 1, law);
  return (2.0 / p) * P1 / std::pow(u.spec.spacing(axis), p);
}

DirectionalScheme make_scheme(double s, double p, const GridSpec& spec, int axis,
                              const QuadratureSpec& quad) {
  check_sp(s, p);
  quad.validate();
  spec.validate();

  DirectionalScheme sch;
  sch.s = s;
  sch.p = p;
  sch.pref = 2.0 * s * (1.0 - s);
  sch.dx = spec.spacing(axis);
  sch.h0 = quad.near_cut * sch.dx;
  sch.H = quad.resolve_tail(spec.domain_hi(axis) - spec.domain_lo(axis),
                            spec.hi[axis] - spec.lo[axis]);
  if (!(sch.H > 2.0 * sch.dx))
    throw std::invalid_argument("quadrature.tail_cut must exceed 2 grid spacings");
  sch.max_shift = required_shift(sch.H, sch.dx);
  if (s == 1.0) return sch;  // local branch needs no h-grid

  const double sp = s * p;
  sch.linear_term_ok = sp < 1.0;
  sch.near_A = std::pow(sch.h0, p * (1.0 - s)) / (p * (1.0 - s));
  sch.near_B = sch.linear_term_ok ? std::pow(sch.h0, 1.0 - sp) / (1.0 - sp) : 0.0;
  sch.tail_coeff = 2.0 * std::pow(sch.H, -sp) / sp;

  const auto& rule = gauss_rule(quad.nodes_per_interval);
  double lo = sch.h0;
  while (lo < sch.H * (1.0 - 1e-14)) {
    const double hi = std::min(lo * quad.ratio, sch.H);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double h = mid + half * rule.nodes[g];
      sch.gauss.emplace_back(h, rule.weights[g] * half * std::pow(h, -1.0 - sp));
    }
    lo = hi;
  }
  return sch;
}

std::pair<double, double> near_coefficients(const DirectionalScheme& sch,
                                            const ShiftProfile& pr) {
  if (sch.linear_term_ok && pr.branch != NearBranch::PowerOnly)
    return {pr.alpha, pr.beta};
  const double P1 = pr.P.size() > 1 ? pr.P[1] : 0.0;
  return {P1 / std::pow(pr.dx, pr.p), 0.0};
}

DirectionalParts scheme_energy(const DirectionalScheme& sch, const ShiftProfile& pr) {
  DirectionalParts out;
  if (sch.s == 1.0) {
    const double P1 = pr.P.size() > 1 ? pr.P[1] : 0.0;
    out.value = out.near = (2.0 / sch.p) * P1 / std::pow(pr.dx, sch.p);
    return out;
  }
  const auto [a, b] = near_coefficients(sch, pr);
  out.near = sch.pref * (a * sch.near_A + b * sch.near_B);
  // below dx the mid nodes must see the same near model the closed form uses
  auto F = [&](double h) {
    return h <= pr.dx ? a * std::pow(h, sch.p) + b * h : pr.eval(h);
  };
  out.mid = sch.pref * det_sum_serial(sch.gauss.size(), [&](std::size_t g) {
              return sch.gauss[g].second * F(sch.gauss[g].first);
            });
  out.tail = sch.pref * sch.tail_coeff * pr.norm_pp;
  out.value = out.near + out.mid + out.tail;
  return out;
}

void scheme_weights(const DirectionalScheme& sch, const ShiftProfile& pr,
                    kernels::WeightList& W, double& point_w) {
  if (sch.s == 1.0) throw std::logic_error("scheme_weights: s = 1 has its own stencil");
  std::vector<double> dense(static_cast<std::size_t>(sch.max_shift) + 1, 0.0);

  const double dxp = std::pow(pr.dx, pr.p);
  const bool two_term = sch.linear_term_ok && pr.branch == NearBranch::TwoTerm;
  const bool linear_only = sch.linear_term_ok && pr.branch == NearBranch::LinearOnly;
  const double D = std::pow(2.0, pr.p) - 2.0;

  // contribution of F-hat(h) = alpha h^p + beta h to (dE/dP1, dE/dP2),
  // where cp multiplies the h^p part and cl the h part
  auto add_near = [&](double cp, double cl) {
    if (two_term) {
      dense[1] += (-2.0 * cp / dxp + std::pow(2.0, pr.p) * cl / pr.dx) / D;
      dense[2] += (cp / dxp - cl / pr.dx) / D;
    } else if (linear_only) {
      dense[1] += cl / pr.dx;
    } else {
      dense[1] += cp / dxp;
    }
  };

  add_near(sch.near_A, sch.near_B);
  for (const auto& [h, c] : sch.gauss) {
    if (h <= pr.dx) {
      add_near(c * std::pow(h, pr.p), c * h);
    } else {
      const double t = h / pr.dx;
      const int m = std::min(static_cast<int>(t), sch.max_shift - 1);
      const double theta = t - m;
      dense[static_cast<std::size_t>(m)] += c * (1.0 - theta);
      dense[static_cast<std::size_t>(m) + 1] += c * theta;
    }
  }

  W.clear();
  for (std::size_t m = 1; m < dense.size(); ++m)
    if (dense[m] != 0.0) W.emplace_back(static_cast<int>(m), dense[m]);
  point_w = sch.tail_coeff;
}

DirectionalParts directional_energy_parts(const GridFunction& u, int axis, double s, double p,
                                          const QuadratureSpec& quad, double eps) {
  const auto sch = make_scheme(s, p, u.spec, axis, quad);
  const auto pr = build_shift_profile(u, axis, p, s == 1.0 ? 2 : sch.max_shift, eps);
  return scheme_energy(sch, pr);
}

double directional_energy(const GridFunction& u, int axis, double s, double p,
                          const QuadratureSpec& quad, double eps) {
  return directional_energy_parts(u, axis, s, p, quad, eps).value;
}

EnergyBreakdown total_energy(const GridFunction& u, const AnisoParams& params,
                             const QuadratureSpec& quad,
                             const std::vector<double>* eps_override) {
  params.validate();
  if (params.dim() != u.spec.dim)
    throw std::invalid_argument("total_energy: params dimension does not match grid");
  EnergyBreakdown out;
  const int n = u.spec.dim;
  out.per_direction.resize(n);
  out.near_part.resize(n);
  out.mid_part.resize(n);
  out.tail_part.resize(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double eps = eps_override ? (*eps_override)[i] : 0.0;
    const auto parts = directional_energy_parts(u, i, params.s[i], params.p[i], quad, eps);
    out.per_direction[i] = parts.value;
    out.near_part[i] = parts.near;
    out.mid_part[i] = parts.mid;
    out.tail_part[i] = parts.tail;
    total += parts.value / params.p[i];
  }
  out.total = total;
  return out;
}

}  // namespace afs
