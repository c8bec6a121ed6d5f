#include "anisofrac/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "anisofrac/reduce.hpp"

namespace afs::kernels {

LineSet line_set(const GridSpec& spec, int axis) {
  if (axis < 0 || axis >= spec.dim) throw std::invalid_argument("axis out of range");
  LineSet ls;
  ls.extent = static_cast<std::size_t>(spec.cells[axis]);
  ls.stride = spec.strides()[axis];
  ls.block = ls.extent * ls.stride;
  ls.n_lines = spec.total_nodes() / ls.extent;
  return ls;
}

namespace {

// One chunk of the shift sum: terms j in [jlo, jhi) of
// sum_{j=-m}^{n-1} phi(v[j+m] - v[j]) on a single line (zero extension).
double shift_chunk(const double* line, std::size_t stride, long long n, long long m,
                   long long jlo, long long jhi, const PowerLaw& law) {
  return detail::pairwise_range(0, static_cast<std::size_t>(jhi - jlo),
                                [&](std::size_t t) {
                                  const long long j = jlo + static_cast<long long>(t);
                                  const double a = (j >= 0 && j < n) ? line[j * stride] : 0.0;
                                  const long long k = j + m;
                                  const double b = (k >= 0 && k < n) ? line[k * stride] : 0.0;
                                  return law.phi(b - a);
                                });
}

}  // namespace

double shift_power_sum(const GridFunction& u, int axis, int m, const PowerLaw& law,
                       bool parallel) {
  if (m < 0) throw std::invalid_argument("shift must be >= 0");
  if (m == 0) return 0.0;
  const LineSet ls = line_set(u.spec, axis);
  const long long n = static_cast<long long>(ls.extent);
  const long long mm = m;
  const long long terms = n + mm;  // j in [-m, n): full zero-extended range
  const std::size_t jblocks =
      (static_cast<std::size_t>(terms) + kReduceBlock - 1) / kReduceBlock;
  const std::size_t nchunks = ls.n_lines * jblocks;
  const double* data = u.values.data();

  std::vector<double> partials(nchunks);
  auto fill = [&](std::size_t c) {
    const std::size_t line = c / jblocks;
    const std::size_t jb = c % jblocks;
    const long long jlo = -mm + static_cast<long long>(jb * kReduceBlock);
    const long long jhi =
        std::min<long long>(jlo + static_cast<long long>(kReduceBlock), n);
    partials[c] = shift_chunk(data + ls.base(line), ls.stride, n, mm, jlo, jhi, law);
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c)
      fill(static_cast<std::size_t>(c));
  } else {
    for (std::size_t c = 0; c < nchunks; ++c) fill(c);
  }
  return detail::combine_partials(partials) * u.spec.cell_volume();
}

void accumulate_shift_gradient(const GridFunction& u, int axis, const WeightList& weights,
                               double point_w, const PowerLaw& law, double scale,
                               GridFunction& g, bool parallel) {
  if (!(u.spec == g.spec)) throw std::invalid_argument("gradient grid mismatch");
  const LineSet ls = line_set(u.spec, axis);
  const long long n = static_cast<long long>(ls.extent);
  const double* data = u.values.data();
  double* out = g.values.data();

  auto node = [&](std::size_t line, long long j) {
    const double* v = data + ls.base(line);
    const double uj = v[j * ls.stride];
    double acc = point_w * law.psi(uj);
    for (const auto& [m, w] : weights) {
      const long long jm = j - m, jp = j + m;
      const double um = (jm >= 0 && jm < n) ? v[jm * ls.stride] : 0.0;
      const double up = (jp >= 0 && jp < n) ? v[jp * ls.stride] : 0.0;
      acc += w * (law.psi(uj - um) - law.psi(up - uj));
    }
    out[ls.base(line) + static_cast<std::size_t>(j) * ls.stride] += scale * acc;
  };

  const std::size_t total = ls.n_lines * ls.extent;
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < static_cast<long long>(total); ++t) {
      const std::size_t line = static_cast<std::size_t>(t) / ls.extent;
      node(line, static_cast<long long>(static_cast<std::size_t>(t) % ls.extent));
    }
  } else {
    for (std::size_t t = 0; t < total; ++t)
      node(t / ls.extent, static_cast<long long>(t % ls.extent));
  }
}

double shift_pairing_sum(const GridFunction& u, const GridFunction& v, int axis,
                         const WeightList& weights, double point_w, const PowerLaw& law,
                         bool parallel) {
  if (!(u.spec == v.spec)) throw std::invalid_argument("pairing grid mismatch");
  const LineSet ls = line_set(u.spec, axis);
  const long long n = static_cast<long long>(ls.extent);
  const double* ud = u.values.data();
  const double* vd = v.values.data();

  double total = 0.0;
  for (const auto& [m, w] : weights) {
    const long long mm = m;
    const std::size_t terms = static_cast<std::size_t>(n + mm);
    const double part = det_sum(
        ls.n_lines * terms,
        [&](std::size_t t) {
          const std::size_t line = t / terms;
          const long long j = static_cast<long long>(t % terms) - mm;
          const double* ul = ud + ls.base(line);
          const double* vl = vd + ls.base(line);
          const long long k = j + mm;
          const double ua = (j >= 0 && j < n) ? ul[j * ls.stride] : 0.0;
          const double ub = (k >= 0 && k < n) ? ul[k * ls.stride] : 0.0;
          const double va = (j >= 0 && j < n) ? vl[j * ls.stride] : 0.0;
          const double vb = (k >= 0 && k < n) ? vl[k * ls.stride] : 0.0;
          return law.psi(ub - ua) * (vb - va);
        },
        parallel);
    total += w * part;
  }
  if (point_w != 0.0) {
    total += point_w * det_sum(
                           u.values.size(),
                           [&](std::size_t i) { return law.psi(ud[i]) * vd[i]; },
                           parallel);
  }
  return total * u.spec.cell_volume();
}

}  // namespace afs::kernels
