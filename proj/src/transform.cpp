#include "anisofrac/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anisofrac/kernels.hpp"

namespace afs {

GridFunction mollify(const GridFunction& u, int radius) {
  if (radius < 1) throw std::invalid_argument("mollify: radius must be >= 1");
  for (int a = 0; a < u.spec.dim; ++a)
    if (radius > u.spec.margin[a])
      throw std::invalid_argument("mollify: radius exceeds margin on axis " + std::to_string(a));

  const int r = radius;
  std::vector<double> w(static_cast<std::size_t>(2 * r + 1));
  const double denom = static_cast<double>((r + 1) * (r + 1));
  for (int k = -r; k <= r; ++k) w[static_cast<std::size_t>(k + r)] = (r + 1 - std::abs(k)) / denom;

  GridFunction cur = u;
  for (int axis = 0; axis < u.spec.dim; ++axis) {
    const auto ls = kernels::line_set(u.spec, axis);
    GridFunction next(u.spec);
    const long long n = static_cast<long long>(ls.extent);
    for (std::size_t line = 0; line < ls.n_lines; ++line) {
      const double* src = cur.values.data() + ls.base(line);
      double* dst = next.values.data() + ls.base(line);
      for (long long j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int k = -r; k <= r; ++k) {
          const long long jj = j - k;
          if (jj >= 0 && jj < n) acc += w[static_cast<std::size_t>(k + r)] * src[jj * ls.stride];
        }
        dst[static_cast<std::size_t>(j) * ls.stride] = acc;
      }
    }
    cur = std::move(next);
  }

  for (std::size_t i = 0; i < cur.values.size(); ++i) {
    if (cur.is_margin(i) && cur.values[i] != 0.0)
      throw std::invalid_argument(
          "mollify: support is closer than `radius` to the margin; the convolution would "
          "spread onto margin cells (node " + std::to_string(i) + ")");
  }
  return cur;
}

GridFunction truncate(const GridFunction& u, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("truncate: k must be > 0");
  GridFunction out(u.spec);
  std::vector<int> idx(u.spec.dim, 0);
  for (std::size_t flat = 0; flat < u.values.size(); ++flat) {
    double r2 = 0.0;
    for (int a = 0; a < u.spec.dim; ++a) {
      const double x = u.spec.node_coord(a, idx[a]);
      r2 += x * x;
    }
    const double eta = std::clamp(2.0 - std::sqrt(r2) / k, 0.0, 1.0);
    out.values[flat] = eta * u.values[flat];
    for (int a = u.spec.dim - 1; a >= 0; --a) {
      if (++idx[a] < u.spec.cells[a]) break;
      idx[a] = 0;
    }
  }
  return out;
}

double truncation_constant(double p) {
  return std::pow(2.0, p - 1.0) * (1.0 + std::pow(2.0, p + 1.0) / p + std::pow(2.0, p) / p);
}

}  // namespace afs
