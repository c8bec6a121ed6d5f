#include "anisofrac/quadrature.hpp"

#include <stdexcept>

namespace afs {

void QuadratureSpec::validate() const {
  if (!(near_cut > 0.0) || near_cut > 1.0)
    throw std::invalid_argument("quadrature.near_cut must be in (0, 1]");
  if (!(ratio > 1.0)) throw std::invalid_argument("quadrature.ratio must be > 1");
  if (nodes_per_interval < 1 || nodes_per_interval > 6)
    throw std::invalid_argument("quadrature.nodes_per_interval must be in 1..6");
  if (tail_cut < 0.0) throw std::invalid_argument("quadrature.tail_cut must be >= 0 (0 = auto)");
}

double QuadratureSpec::resolve_tail(double domain_extent, double box_length) const {
  return tail_cut > 0.0 ? tail_cut : domain_extent + box_length;
}

const GaussRule& gauss_rule(int n) {
  static const GaussRule rules[] = {
      {{0.0}, {2.0}},
      {{-0.5773502691896257645, 0.5773502691896257645}, {1.0, 1.0}},
      {{-0.7745966692414833770, 0.0, 0.7745966692414833770},
       {0.5555555555555555556, 0.8888888888888888889, 0.5555555555555555556}},
      {{-0.8611363115940525752, -0.3399810435848562648, 0.3399810435848562648,
        0.8611363115940525752},
       {0.3478548451374538574, 0.6521451548625461426, 0.6521451548625461426,
        0.3478548451374538574}},
      {{-0.9061798459386639928, -0.5384693101056830910, 0.0, 0.5384693101056830910,
        0.9061798459386639928},
       {0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
        0.4786286704993664680, 0.2369268850561890875}},
      {{-0.9324695142031520278, -0.6612093864662645137, -0.2386191860831969086,
        0.2386191860831969086, 0.6612093864662645137, 0.9324695142031520278},
       {0.1713244923791703450, 0.3607615730481386076, 0.4679139345726910474,
        0.4679139345726910474, 0.3607615730481386076, 0.1713244923791703450}}};
  if (n < 1 || n > 6) throw std::invalid_argument("gauss_rule: n must be in 1..6");
  return rules[n - 1];
}

}  // namespace afs
