#pragma once

// Source laws f(x, z) with primitive F(x, z). The built-in family is the
// weighted pure power f = a(x) |z|^{q-2} z, F = a(x) |z|^q / q with a >= a0 > 0
// (default a == 1), which satisfies the superlinearity/monotonicity structure
// needed by the ground-state machinery with mu = q exactly.

#include <optional>
#include <string>

#include "anisofrac/grid.hpp"
#include "anisofrac/params.hpp"
#include "anisofrac/sample.hpp"

namespace afs {

struct Nonlinearity {
  std::string kind = "pure_power";
  double q = 4.0;
  double mu = 0.0;  // 0 = default (q for the pure power law)
  double C = 1.0;   // growth constant |f| <= C (1 + |z|^{q-1})
  std::optional<Expression> weight;  // a(x) = 1 + expr(x); empty = a == 1

  void validate() const;
  // structural checks against the exponents: q > p_max and q < p* (when defined)
  void validate_against(const AnisoParams& params, int n) const;
  double ar_mu() const { return mu > 0.0 ? mu : q; }
};

struct NonlinearityEval {
  double f = 0.0;
  double F = 0.0;
};

// weight field sampled on the grid (all ones when no expression is set);
// throws if a(x) is not strictly positive on the non-margin region
GridFunction weight_field(const Nonlinearity& nl, const GridSpec& spec);

NonlinearityEval nonlinearity_eval(const Nonlinearity& nl, double a_of_x, double z);

// integrals over the grid: sum a |u|^q / q vol  and  sum a |u|^{q-2} u * u vol
double primitive_integral(const Nonlinearity& nl, const GridFunction& a, const GridFunction& u);
double force_pairing(const Nonlinearity& nl, const GridFunction& a, const GridFunction& u);
// f(x, u) as a grid function (masked to the non-margin region by u's own mask)
GridFunction force_field(const Nonlinearity& nl, const GridFunction& a, const GridFunction& u);

}  // namespace afs
