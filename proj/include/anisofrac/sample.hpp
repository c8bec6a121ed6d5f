#pragma once

// Named analytic expressions sampled at cell centers. Every expression has an
// explicit support box and is identically zero outside it, so sampled
// functions honor the zero-margin convention by construction.

#include <string>
#include <vector>

#include "anisofrac/grid.hpp"

namespace afs {

// Built-in kinds:
//   zero                 — 0
//   tent                 — A * prod_i max(0, 1 - 2|x_i - c_i| / w_i)
//   bump                 — A * exp(-1 / (1 - r^2)), r^2 = sum (2(x_i-c_i)/w_i)^2, r < 1
//   indicator            — A on the sub-box [a_i, b_i)
//   sine                 — A * prod_i sin(k_i pi (x_i - a_i) / (b_i - a_i)) on the sub-box
//   polybump             — A * prod_i t_i^{d_i} * exp(-1/(1-r^2)), t_i = 2(x_i-c_i)/w_i
struct Expression {
  std::string kind = "zero";
  double amplitude = 1.0;
  std::vector<double> center;  // tent / bump / polybump
  std::vector<double> width;
  std::vector<double> box_lo;  // indicator / sine
  std::vector<double> box_hi;
  std::vector<int> mode;       // sine: k_i >= 1 (default all 1)
  std::vector<int> degree;     // polybump: d_i >= 0 (default all 0)

  double operator()(const std::vector<double>& x) const;
  // closed support box; throws for malformed parameter sets
  void support(int dim, std::vector<double>& slo, std::vector<double>& shi) const;
  void validate(int dim) const;
};

// Evaluate at every cell center; rejects expressions whose support leaves the
// non-margin region (message names the offending axis).
GridFunction sample(const Expression& e, const GridSpec& spec);

}  // namespace afs
