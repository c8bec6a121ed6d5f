#include "anisofrac/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

#include "anisofrac/reduce.hpp"

namespace afs {

void Nonlinearity::validate() const {
  if (kind != "pure_power")
    throw std::invalid_argument("nonlinearity.kind '" + kind + "' is not in the registry");
  if (!(q > 1.0)) throw std::invalid_argument("nonlinearity.q must be > 1");
  if (mu < 0.0) throw std::invalid_argument("nonlinearity.mu must be >= 0 (0 = default q)");
  if (!(C > 0.0)) throw std::invalid_argument("nonlinearity.C must be > 0");
}

void Nonlinearity::validate_against(const AnisoParams& params, int n) const {
  validate();
  const auto sum = aniso_summary(params, n);
  if (!(q > sum.p_max))
    throw std::invalid_argument("nonlinearity.q must exceed p_max = " + std::to_string(sum.p_max) +
                                " (superlinear growth; q = p_max is unsupported)");
  if (!(q < sum.p_star_or_inf()))
    throw std::invalid_argument("nonlinearity.q = " + std::to_string(q) +
                                " is not subcritical: requires q < p* = " +
                                std::to_string(sum.p_star_or_inf()));
  if (!(ar_mu() > sum.p_max))
    throw std::invalid_argument("nonlinearity.mu must exceed p_max");
}

GridFunction weight_field(const Nonlinearity& nl, const GridSpec& spec) {
  GridFunction a(spec);
  if (nl.weight) {
    a = sample(*nl.weight, spec);
  }
  for (double& v : a.values) v += 1.0;
  // margin values are never used by the nonlinearity (u vanishes there), but
  // the weight must be positive wherever u can live
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!(a.values[i] > 0.0) && !a.is_margin(i))
      throw std::invalid_argument("nonlinearity.weight is not strictly positive on the domain");
  return a;
}

NonlinearityEval nonlinearity_eval(const Nonlinearity& nl, double a_of_x, double z) {
  nl.validate();
  NonlinearityEval out;
  if (z == 0.0) return out;
  const double zq2 = std::pow(std::abs(z), nl.q - 2.0);
  out.f = a_of_x * zq2 * z;
  out.F = a_of_x * zq2 * z * z / nl.q;
  return out;
}

double primitive_integral(const Nonlinearity& nl, const GridFunction& a, const GridFunction& u) {
  const double* av = a.values.data();
  const double* uv = u.values.data();
  const double q = nl.q;
  return det_sum(u.values.size(),
                 [&](std::size_t i) { return av[i] * std::pow(std::abs(uv[i]), q); }) *
         u.spec.cell_volume() / q;
}

double force_pairing(const Nonlinearity& nl, const GridFunction& a, const GridFunction& u) {
  const double* av = a.values.data();
  const double* uv = u.values.data();
  const double q = nl.q;
  return det_sum(u.values.size(),
                 [&](std::size_t i) { return av[i] * std::pow(std::abs(uv[i]), q); }) *
         u.spec.cell_volume();
}

GridFunction force_field(const Nonlinearity& nl, const GridFunction& a, const GridFunction& u) {
  GridFunction f(u.spec);
  const double q = nl.q;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    const double z = u.values[i];
    f.values[i] = z == 0.0 ? 0.0 : a.values[i] * std::pow(std::abs(z), q - 2.0) * z;
  }
  return f;
}

}  // namespace afs
