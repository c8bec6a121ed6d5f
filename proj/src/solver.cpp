#include "anisofrac/solver.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "anisofrac/reduce.hpp"

namespace afs {

void SolveOptions::validate() const {
  if (max_iter < 1) throw std::invalid_argument("solver.max_iter must be >= 1");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("solver.grad_tol must be > 0");
  if (!(armijo > 0.0) || armijo >= 1.0)
    throw std::invalid_argument("solver.armijo must be in (0,1)");
  if (step_rule == StepRule::Fixed && !(fixed_step > 0.0))
    throw std::invalid_argument("solver.fixed_step must be > 0 for the fixed step rule");
  if (max_backtracks < 1) throw std::invalid_argument("solver.max_backtracks must be >= 1");
  if (!(bump_width_frac > 0.0) || bump_width_frac > 1.0)
    throw std::invalid_argument("solver.bump_width_frac must be in (0,1]");
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct EnergyModel {
  AnisoParams params;
  QuadratureSpec quad;
  std::vector<double> eps;
  std::vector<DirectionalScheme> schemes;

  EnergyModel(const GridSpec& spec, const AnisoParams& prm, const QuadratureSpec& q,
              std::vector<double> e)
      : params(prm), quad(q), eps(std::move(e)) {
    for (int i = 0; i < spec.dim; ++i)
      schemes.push_back(make_scheme(params.s[i], params.p[i], spec, i, quad));
  }

  double J(const GridFunction& u) const {
    double total = 0.0;
    for (std::size_t i = 0; i < schemes.size(); ++i) {
      const auto& sch = schemes[i];
      const auto pr = build_shift_profile(u, static_cast<int>(i), sch.p,
                                          sch.s == 1.0 ? 2 : sch.max_shift, eps[i]);
      total += scheme_energy(sch, pr).value / sch.p;
    }
    return total;
  }

  EnergyBreakdown breakdown(const GridFunction& u) const {
    EnergyBreakdown out;
    const int n = static_cast<int>(schemes.size());
    out.per_direction.resize(n);
    out.near_part.resize(n);
    out.mid_part.resize(n);
    out.tail_part.resize(n);
    for (int i = 0; i < n; ++i) {
      const auto& sch = schemes[i];
      const auto pr =
          build_shift_profile(u, i, sch.p, sch.s == 1.0 ? 2 : sch.max_shift, eps[i]);
      const auto parts = scheme_energy(sch, pr);
      out.per_direction[i] = parts.value;
      out.near_part[i] = parts.near;
      out.mid_part[i] = parts.mid;
      out.tail_part[i] = parts.tail;
      out.total += parts.value / sch.p;
    }
    return out;
  }

  GridFunction grad(const GridFunction& u) const {
    GridFunction g(u.spec);
    for (std::size_t i = 0; i < schemes.size(); ++i) {
      const auto& sch = schemes[i];
      const auto law = kernels::PowerLaw::make(sch.p, eps[i]);
      if (sch.s == 1.0) {
        const kernels::WeightList one{{1, 1.0}};
        const double dxp = std::pow(u.spec.spacing(static_cast<int>(i)), sch.p);
        kernels::accumulate_shift_gradient(u, static_cast<int>(i), one, 0.0, law,
                                           2.0 / (sch.p * dxp), g);
      } else {
        const auto pr =
            build_shift_profile(u, static_cast<int>(i), sch.p, sch.max_shift, eps[i]);
        kernels::WeightList W;
        double point_w = 0.0;
        scheme_weights(sch, pr, W, point_w);
        kernels::accumulate_shift_gradient(u, static_cast<int>(i), W, point_w, law, sch.pref,
                                           g);
      }
    }
    g.zero_margin();
    return g;
  }
};

double grid_l2(const GridFunction& g) { return std::sqrt(inner(g, g)); }

void axpy(GridFunction& y, double a, const GridFunction& x) {
  for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] += a * x.values[i];
}

struct DescentState {
  GridFunction u_prev, g_prev;
  double t_prev = 0.0;
  bool have_prev = false;
};

double bb_step(const DescentState& st, const GridFunction& u, const GridFunction& g) {
  GridFunction du = u, dg = g;
  axpy(du, -1.0, st.u_prev);
  axpy(dg, -1.0, st.g_prev);
  const double ss = inner(du, du);
  const double sy = inner(du, dg);
  if (!(sy > 0.0) || !(ss > 0.0)) return st.t_prev;
  return ss / sy;
}

std::vector<double> default_eps_vec(const AnisoParams& params, double scale) {
  std::vector<double> eps(params.p.size());
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] = default_epsilon(params.p[i], scale);
  return eps;
}

}  // namespace

SolveResult solve_dirichlet(const GridFunction& f, const AnisoParams& params,
                            const QuadratureSpec& quad, const SolveOptions& opts) {
  const auto t_start = std::chrono::steady_clock::now();
  params.validate();
  opts.validate();
  quad.validate();
  if (params.dim() != f.spec.dim)
    throw std::invalid_argument("solve_dirichlet: params dimension does not match grid");
  const auto summary = aniso_summary(params, f.spec.dim);
  if (!(summary.p_max < summary.p_star_or_inf()))
    throw std::invalid_argument("solve_dirichlet: requires p_max < p* (p_max = " +
                                std::to_string(summary.p_max) + ", p* = " +
                                std::to_string(summary.p_star_or_inf()) + ")");
  f.check_invariants();  // source supported in the domain, finite

  const double fscale = max_abs(f);
  const EnergyModel model(f.spec, params, quad, default_eps_vec(params, std::max(fscale, 1e-30)));

  GridFunction u(f.spec);
  if (opts.init_amplitude > 0.0) {
    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
      const double r = opts.init_amplitude * (2.0 * uniform01(rng) - 1.0);
      if (!u.is_margin(i)) u.values[i] = r;
    }
  }

  auto value = [&](const GridFunction& v) { return model.J(v) - inner(f, v); };
  auto gradient = [&](const GridFunction& v) {
    GridFunction g = model.grad(v);
    axpy(g, -1.0, f);
    g.zero_margin();
    return g;
  };

  SolveResult res;
  GridFunction g = gradient(u);
  double cur = value(u);
  const double res0 = grid_l2(g);
  double rnorm = res0;
  bool monotone = true;
  DescentState st;
  int it = 0;

  if (res0 > 0.0) {
    for (it = 1; it <= opts.max_iter; ++it) {
      if (rnorm <= opts.grad_tol * res0) break;
      double t;
      if (opts.step_rule == StepRule::Fixed) {
        t = opts.fixed_step;
      } else if (st.have_prev) {
        t = bb_step(st, u, g);
      } else {
        // secant probe along -g for an initial curvature estimate
        const double tau = 1e-6 * (1.0 + grid_l2(u)) / rnorm;
        GridFunction up = u;
        axpy(up, -tau, g);
        GridFunction gp = gradient(up);
        axpy(gp, -1.0, g);
        const double lam = grid_l2(gp) / (tau * rnorm);
        t = lam > 0.0 ? 1.0 / lam : 1.0;
      }
      const double gg = inner(g, g);
      GridFunction trial = u;
      double next = 0.0;
      int bt = 0;
      for (; bt < opts.max_backtracks; ++bt) {
        trial = u;
        axpy(trial, -t, g);
        next = value(trial);
        if (next <= cur - opts.armijo * t * gg) break;
        t *= 0.5;
      }
      if (bt == opts.max_backtracks) break;  // stagnation
      st.u_prev = u;
      st.g_prev = g;
      st.t_prev = t;
      st.have_prev = opts.step_rule == StepRule::BarzilaiBorwein;
      if (next > cur + 1e-14 * (std::abs(cur) + 1.0)) monotone = false;
      u = std::move(trial);
      cur = next;
      g = gradient(u);
      rnorm = grid_l2(g);
    }
  }

  res.u = std::move(u);
  res.energy = cur;
  res.residual = rnorm;
  res.iterations = it > opts.max_iter ? opts.max_iter : (it > 0 ? it - 1 : 0);
  res.converged = rnorm <= opts.grad_tol * res0 || res0 == 0.0;
  res.metadata["res0"] = res0;
  res.metadata["monotone"] = monotone ? 1.0 : 0.0;
  for (std::size_t i = 0; i < model.eps.size(); ++i)
    res.metadata["eps" + std::to_string(i)] = model.eps[i];
  res.metadata["time_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t_start)
                                .count();
  return res;
}

double nehari_scale(const GridFunction& u, const AnisoParams& params, const Nonlinearity& nl,
                    const QuadratureSpec& quad) {
  params.validate();
  nl.validate_against(params, u.spec.dim);
  const GridFunction a = weight_field(nl, u.spec);
  const double B = force_pairing(nl, a, u);
  if (!(B > 0.0)) throw std::invalid_argument("nehari_scale: u must be nonzero");

  std::vector<double> Ji(params.p.size());
  const EnergyModel model(u.spec, params, quad, std::vector<double>(params.p.size(), 0.0));
  const auto parts = model.breakdown(u);
  Ji = parts.per_direction;

  bool equal_p = true;
  for (double pi : params.p)
    if (pi != params.p[0]) equal_p = false;
  if (equal_p) {
    double A = 0.0;
    for (double j : Ji) A += j;
    if (!(A > 0.0)) throw std::invalid_argument("nehari_scale: u must be nonzero");
    return std::pow(A / B, 1.0 / (nl.q - params.p[0]));
  }

  auto dphi = [&](double t) {
    double v = 0.0;
    for (std::size_t i = 0; i < Ji.size(); ++i) v += std::pow(t, params.p[i] - 1.0) * Ji[i];
    return v - std::pow(t, nl.q - 1.0) * B;
  };
  double lo = 1.0, hi = 1.0;
  int guard = 0;
  while (dphi(hi) > 0.0 && hi < 1e12) hi *= 2.0;
  while (dphi(lo) < 0.0 && lo > 1e-12) lo *= 0.5;
  if (dphi(hi) > 0.0 || dphi(lo) < 0.0)
    throw std::runtime_error("nehari_scale: no root bracketed in [1e-12, 1e12]");
  for (; guard < 200 && hi - lo > 1e-15 * hi; ++guard) {
    const double mid = 0.5 * (lo + hi);
    (dphi(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

GroundStateResult ground_state(const GridSpec& spec, const AnisoParams& params,
                               const Nonlinearity& nl, const QuadratureSpec& quad,
                               const SolveOptions& opts) {
  const auto t_start = std::chrono::steady_clock::now();
  spec.validate();
  params.validate();
  opts.validate();
  nl.validate_against(params, spec.dim);

  const GridFunction a = weight_field(nl, spec);
  const EnergyModel model(spec, params, quad,
                          default_eps_vec(params, 1.0));  // bump scale is O(1)

  // centered positive bump; the seed only perturbs it
  Expression bump;
  bump.kind = "bump";
  bump.amplitude = opts.bump_amplitude;
  for (int i = 0; i < spec.dim; ++i) {
    bump.center.push_back(0.5 * (spec.domain_lo(i) + spec.domain_hi(i)));
    bump.width.push_back(opts.bump_width_frac * (spec.domain_hi(i) - spec.domain_lo(i)));
  }
  GridFunction u = sample(bump, spec);
  if (opts.perturb > 0.0) {
    std::mt19937_64 rng(opts.seed);
    for (double& v : u.values) v *= 1.0 + opts.perturb * (2.0 * uniform01(rng) - 1.0);
  }

  auto value = [&](const GridFunction& v) {
    return model.J(v) - primitive_integral(nl, a, v);
  };
  auto gradient = [&](const GridFunction& v) {
    GridFunction g = model.grad(v);
    const GridFunction fv = force_field(nl, a, v);
    axpy(g, -1.0, fv);
    g.zero_margin();
    return g;
  };
  auto project = [&](GridFunction v) {
    const double t = nehari_scale(v, params, nl, quad);
    for (double& x : v.values) x *= t;
    return v;
  };

  GroundStateResult res;
  u = project(std::move(u));
  GridFunction g = gradient(u);
  double cur = value(u);
  const double res0 = grid_l2(g);
  double rnorm = res0;
  DescentState st;
  bool collapsed = false;
  int it = 0;

  for (it = 1; it <= opts.max_iter; ++it) {
    if (rnorm <= opts.grad_tol * res0) break;
    double t = opts.step_rule == StepRule::Fixed
                   ? opts.fixed_step
                   : (st.have_prev ? bb_step(st, u, g) : 0.1 * grid_l2(u) / rnorm);
    const double gg = inner(g, g);
    GridFunction next_u = u;
    double next = 0.0;
    int bt = 0;
    for (; bt < opts.max_backtracks; ++bt) {
      GridFunction trial = u;
      axpy(trial, -t, g);
      if (max_abs(trial) < 1e-14) {
        collapsed = true;
        break;
      }
      trial = project(std::move(trial));
      next = value(trial);
      if (next <= cur - opts.armijo * t * gg) {
        next_u = std::move(trial);
        break;
      }
      t *= 0.5;
    }
    if (collapsed || bt == opts.max_backtracks) break;
    st.u_prev = u;
    st.g_prev = g;
    st.t_prev = t;
    st.have_prev = opts.step_rule == StepRule::BarzilaiBorwein;
    u = std::move(next_u);
    cur = next;
    g = gradient(u);
    rnorm = grid_l2(g);
  }
  if (collapsed) throw std::runtime_error("ground_state: iterate collapsed to zero");

  res.energy_parts = model.breakdown(u);
  double sumJ = 0.0;
  for (double j : res.energy_parts.per_direction) sumJ += j;
  res.nehari_residual = std::abs(sumJ - force_pairing(nl, a, u));
  res.level = cur;
  res.residual = rnorm;
  res.iterations = it > opts.max_iter ? opts.max_iter : (it > 0 ? it - 1 : 0);
  res.converged = rnorm <= opts.grad_tol * res0 && res.level > 0.0;
  res.u = std::move(u);
  res.metadata["res0"] = res0;
  res.metadata["time_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t_start)
                                .count();
  return res;
}

}  // namespace afs
