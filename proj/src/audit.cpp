#include "anisofrac/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "anisofrac/transform.hpp"

namespace afs {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct LemmaAccumulator {
  AuditCheck* slot = nullptr;
  AuditReport* report = nullptr;
  const AuditOptions* opts = nullptr;
  int trial = 0;

  void record(double lhs, double rhs, double s_lo, double s_hi, const GridFunction& u) {
    if (!(rhs > 0.0)) return;  // zero function: nothing to compare
    const double margin = lhs / rhs - 1.0;
    slot->checks += 1;
    if (margin > slot->worst_margin) slot->worst_margin = margin;
    if (margin > slot->tolerance) {
      slot->violations += 1;
      report->passed = false;
      char note[160];
      std::snprintf(note, sizeof(note), "%s p=%g s=[%g,%g] trial=%d margin=%.3e",
                    slot->lemma.c_str(), slot->p, s_lo, s_hi, trial, margin);
      report->violation_notes.emplace_back(note);
      if (!opts->dump_dir.empty()) {
        const std::string path = opts->dump_dir + "/violation_" + slot->lemma + "_t" +
                                 std::to_string(trial) + "_p" + std::to_string(slot->p) + ".csv";
        write_grid_csv(u, path);
        report->violation_notes.back() += " dump=" + path;
      }
    }
  }
};

}  // namespace

GridFunction audit_random_function(const GridSpec& grid, unsigned long long seed, int trial,
                                   int clearance) {
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<unsigned long long>(trial + 1));
  GridFunction u(grid);
  std::vector<int> idx(grid.dim, 0);
  for (std::size_t flat = 0; flat < u.values.size(); ++flat) {
    bool inside = true;
    for (int a = 0; a < grid.dim; ++a) {
      const int lo = grid.margin[a] + clearance;
      if (idx[a] < lo || idx[a] >= grid.cells[a] - lo) inside = false;
    }
    const double r = 2.0 * uniform01(rng) - 1.0;  // always consume: layout-stable stream
    if (inside) u.values[flat] = r;
    for (int a = grid.dim - 1; a >= 0; --a) {
      if (++idx[a] < grid.cells[a]) break;
      idx[a] = 0;
    }
  }
  u = mollify(u, 2);
  const double m = max_abs(u);
  if (m > 0.0)
    for (double& v : u.values) v /= m;
  return u;
}

AuditReport inequality_audit(const AuditOptions& opts) {
  opts.grid.validate();
  opts.quad.validate();
  if (opts.trials < 0) throw std::invalid_argument("audit.trials must be >= 0");
  for (double s : opts.s_grid)
    if (!(s > 0.0) || s >= 1.0)
      throw std::invalid_argument("audit.s_grid values must lie in (0,1)");
  for (double p : opts.p_grid)
    if (!(p > 1.0)) throw std::invalid_argument("audit.p_grid values must be > 1");
  if (opts.mollify_radius < 1 || opts.mollify_radius > opts.grid.margin[0])
    throw std::invalid_argument("audit.mollify_radius must be in [1, margin]");

  std::vector<double> ks = opts.truncate_ks;
  if (ks.empty()) {
    double radius = 0.0;
    for (int a = 0; a < opts.grid.dim; ++a)
      radius = std::max(radius, std::max(std::abs(opts.grid.lo[a]), std::abs(opts.grid.hi[a])));
    ks = {0.25 * radius, 0.5 * radius};
  }

  AuditReport report;
  report.seed = opts.seed;
  report.trials = opts.trials;

  const int axis = 0;
  struct SchemeSet {
    double p;
    std::vector<DirectionalScheme> per_s;
    int max_shift = 2;
  };
  std::vector<SchemeSet> sets;
  for (double p : opts.p_grid) {
    SchemeSet set;
    set.p = p;
    for (double s : opts.s_grid) {
      set.per_s.push_back(make_scheme(s, p, opts.grid, axis, opts.quad));
      set.max_shift = std::max(set.max_shift, set.per_s.back().max_shift);
    }
    sets.push_back(std::move(set));
  }

  auto make_check = [&](const char* lemma, double p, double tol) {
    AuditCheck c;
    c.lemma = lemma;
    c.p = p;
    c.tolerance = tol;
    report.checks.push_back(c);
    return report.checks.size() - 1;
  };
  std::vector<std::size_t> i_grad, i_moll, i_trunc, i_comp;
  for (const auto& set : sets) {
    i_grad.push_back(make_check("gradient_bound", set.p, 1e-6));
    i_moll.push_back(make_check("mollify_decrease", set.p, 1e-9));
    i_trunc.push_back(make_check("truncation_bound", set.p, 1e-6));
    i_comp.push_back(make_check("order_compare", set.p, 1e-6));
  }

  const int clearance = opts.mollify_radius + 2;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const GridFunction u = audit_random_function(opts.grid, opts.seed, trial, clearance);
    const GridFunction um = mollify(u, opts.mollify_radius);
    std::vector<GridFunction> uts;
    for (double k : ks) uts.push_back(truncate(u, k));

    for (std::size_t pi = 0; pi < sets.size(); ++pi) {
      const auto& set = sets[pi];
      const double p = set.p;
      const auto pr = build_shift_profile(u, axis, p, set.max_shift);
      const auto prm = build_shift_profile(um, axis, p, set.max_shift);
      std::vector<ShiftProfile> prt;
      for (const auto& ut : uts) prt.push_back(build_shift_profile(ut, axis, p, set.max_shift));

      const double Np = pr.norm_pp;
      const double Gp = pr.P[1] / std::pow(pr.dx, p);  // ||D_axis u||_p^p
      const double two_pp1 = std::pow(2.0, p + 1.0);

      std::vector<double> J(opts.s_grid.size());
      for (std::size_t si = 0; si < opts.s_grid.size(); ++si)
        J[si] = scheme_energy(set.per_s[si], pr).value;

      LemmaAccumulator grad{&report.checks[i_grad[pi]], &report, &opts, trial};
      LemmaAccumulator moll{&report.checks[i_moll[pi]], &report, &opts, trial};
      LemmaAccumulator trunc{&report.checks[i_trunc[pi]], &report, &opts, trial};
      LemmaAccumulator comp{&report.checks[i_comp[pi]], &report, &opts, trial};

      for (std::size_t si = 0; si < opts.s_grid.size(); ++si) {
        const double s = opts.s_grid[si];
        // J_s(u) <= (1/p)(s ||D u||_p^p + (1-s) 2^{p+1} ||u||_p^p)
        grad.record(J[si], (s * Gp + (1.0 - s) * two_pp1 * Np) / p, s, s, u);
        // J_s(mollify u) <= J_s(u)
        moll.record(scheme_energy(set.per_s[si], prm).value, J[si], s, s, u);
        // J_s(truncate u) <= C(p) (J_s(u) + ||u||_p^p)
        for (const auto& pt : prt)
          trunc.record(scheme_energy(set.per_s[si], pt).value,
                       truncation_constant(p) * (J[si] + Np), s, s, u);
        // J_{s1} <= 2^{(1-s1)p} J_{s2} + (1-s1) 2^{p+1} / p ||u||_p^p
        for (std::size_t sj = si + 1; sj < opts.s_grid.size(); ++sj) {
          const double s2 = opts.s_grid[sj];
          const double rhs = std::pow(2.0, (1.0 - s) * p) * J[sj] * opts.corrupt_scale +
                             (1.0 - s) * two_pp1 / p * Np;
          comp.record(J[si], rhs, s, s2, u);
        }
      }
    }
  }
  return report;
}

SweepTable audit_table(const AuditReport& report) {
  SweepTable t;
  t.kind = "audit";
  t.seed = report.seed;
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    SweepRow r;
    r.param = static_cast<double>(i);
    r.value = c.checks > 0 ? c.worst_margin : 0.0;
    r.reference = c.tolerance;
    r.abs_err = static_cast<double>(c.violations);
    r.rel_err = 0.0;
    r.near = static_cast<double>(c.checks);
    char flags[64];
    std::snprintf(flags, sizeof(flags), "%s p=%g", c.lemma.c_str(), c.p);
    r.flags = flags;
    t.push(std::move(r));
  }
  t.column_notes = {"param=check index", "value=worst margin (lhs/rhs - 1)",
                    "reference=tolerance", "abs_err=violation count", "near=check count"};
  if (!report.passed) t.notes.push_back("AUDIT FAILED");
  for (const auto& v : report.violation_notes) t.notes.push_back(v);
  return t;
}

}  // namespace afs
