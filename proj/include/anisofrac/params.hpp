#pragma once

// Fractional orders and integrability exponents, one pair per axis, plus the
// harmonic-mean quantities and the critical exponent derived from them.

#include <limits>
#include <vector>

#include "anisofrac/grid.hpp"

namespace afs {

struct AnisoParams {
  std::vector<double> s;  // each in (0, 1]
  std::vector<double> p;  // each in (1, inf)

  int dim() const { return static_cast<int>(s.size()); }
  void validate() const;  // throws naming params.s[i] / params.p[i]
  double p_min() const;
  double p_max() const;
};

struct AnisoSummary {
  double p_min = 0, p_max = 0;
  double s_bar = 0;    // harmonic mean of s_i
  double sp_bar = 0;   // harmonic mean of s_i p_i
  double p_star = 0;   // n (sp_bar / s_bar) / (n - sp_bar); NaN when supercritical
  bool supercritical = false;  // sp_bar >= n: p_star undefined

  // callers that only compare against p_star treat the supercritical case as
  // an embedding into everything
  double p_star_or_inf() const {
    return supercritical ? std::numeric_limits<double>::infinity() : p_star;
  }
};

AnisoSummary aniso_summary(const AnisoParams& params, const GridSpec& spec);
AnisoSummary aniso_summary(const AnisoParams& params, int n);

}  // namespace afs
