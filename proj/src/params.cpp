#include "anisofrac/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace afs {

void AnisoParams::validate() const {
  if (s.empty() || s.size() != p.size())
    throw std::invalid_argument("params.s and params.p must be non-empty and the same length");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] > 0.0) || s[i] > 1.0)
      throw std::invalid_argument("params.s[" + std::to_string(i) + "] outside (0,1]");
    if (!(p[i] > 1.0) || !std::isfinite(p[i]))
      throw std::invalid_argument("params.p[" + std::to_string(i) + "] outside (1,inf)");
  }
}

double AnisoParams::p_min() const { return *std::min_element(p.begin(), p.end()); }
double AnisoParams::p_max() const { return *std::max_element(p.begin(), p.end()); }

AnisoSummary aniso_summary(const AnisoParams& params, int n) {
  params.validate();
  if (params.dim() != n)
    throw std::invalid_argument("params dimension does not match grid dimension");
  AnisoSummary out;
  out.p_min = params.p_min();
  out.p_max = params.p_max();
  double inv_s = 0.0, inv_sp = 0.0;
  for (int i = 0; i < n; ++i) {
    inv_s += 1.0 / params.s[i];
    inv_sp += 1.0 / (params.s[i] * params.p[i]);
  }
  out.s_bar = n / inv_s;
  out.sp_bar = n / inv_sp;
  if (out.sp_bar >= static_cast<double>(n)) {
    out.supercritical = true;
    out.p_star = std::numeric_limits<double>::quiet_NaN();
  } else {
    out.p_star = n * (out.sp_bar / out.s_bar) / (n - out.sp_bar);
  }
  return out;
}

AnisoSummary aniso_summary(const AnisoParams& params, const GridSpec& spec) {
  spec.validate();
  return aniso_summary(params, spec.dim);
}

}  // namespace afs
