#pragma once

// Seeded random audit of the energy inequalities: the gradient/L^p bound, the
// mollification decrease, the truncation bound, and the s1 < s2 comparison.
// Deterministic for a fixed (seed, trials, grids); any violation beyond the
// stated tolerance is reported with the offending function serialized for
// replay.

#include <string>
#include <vector>

#include "anisofrac/energy.hpp"
#include "anisofrac/table.hpp"

namespace afs {

struct AuditOptions {
  GridSpec grid;
  QuadratureSpec quad;
  unsigned long long seed = 42;
  int trials = 100;
  std::vector<double> p_grid{1.5, 2.0, 3.0};
  std::vector<double> s_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  int mollify_radius = 1;
  std::vector<double> truncate_ks;  // empty = quarter and half of the box radius
  std::string dump_dir;             // "" = do not serialize offenders
  // test hook: scales the J_{s2} side of the comparison inequality so a
  // deliberately corrupted energy is caught by the audit
  double corrupt_scale = 1.0;
};

struct AuditCheck {
  std::string lemma;     // gradient_bound / mollify_decrease / truncation_bound / order_compare
  double p = 0.0;
  double tolerance = 0.0;
  double worst_margin = -1.0;  // max over checks of lhs/rhs - 1
  long long checks = 0;
  long long violations = 0;
};

struct AuditReport {
  unsigned long long seed = 0;
  int trials = 0;
  std::vector<AuditCheck> checks;
  std::vector<std::string> violation_notes;
  bool passed = true;
};

AuditReport inequality_audit(const AuditOptions& opts);

// report as a sweep table (param = check index, value = worst margin,
// reference = tolerance, flags = "<lemma> p=<p>")
SweepTable audit_table(const AuditReport& report);

// the audit's function generator, exposed for tests: smoothed uniform noise,
// sup-normalized, supported `clearance` cells inside the non-margin region
GridFunction audit_random_function(const GridSpec& grid, unsigned long long seed, int trial,
                                   int clearance);

}  // namespace afs
