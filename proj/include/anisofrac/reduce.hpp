#pragma once

// Deterministic reductions. Every sum in the library goes through the same
// fixed pairwise tree: the term range is cut into fixed-size blocks, each
// block is summed by recursive halving, and the block partials are combined
// by the same halving. The tree depends only on the term count, never on the
// thread count, so parallel results are bit-identical to serial ones.

#include <cstddef>
#include <vector>

namespace afs {

inline constexpr std::size_t kReduceBlock = 4096;

// Threads used by parallel kernels; 0 = OpenMP default. Results never depend
// on this value.
void set_max_threads(int n);
int max_threads();

namespace detail {

template <class F>
double pairwise_range(std::size_t lo, std::size_t hi, const F& f) {
  const std::size_t n = hi - lo;
  if (n <= 16) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += f(i);
    return acc;
  }
  const std::size_t mid = lo + n / 2;
  return pairwise_range(lo, mid, f) + pairwise_range(mid, hi, f);
}

double combine_partials(std::vector<double>& partials);

}  // namespace detail

// Serial deterministic sum of f(0..n-1).
template <class F>
double det_sum_serial(std::size_t n, const F& f) {
  if (n == 0) return 0.0;
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  if (nblocks == 1) return detail::pairwise_range(0, n, f);
  std::vector<double> partials(nblocks);
  for (std::size_t b = 0; b < nblocks; ++b) {
    const std::size_t lo = b * kReduceBlock;
    const std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
    partials[b] = detail::pairwise_range(lo, hi, f);
  }
  return detail::combine_partials(partials);
}

// Parallel variant with the identical tree.
template <class F>
double det_sum_parallel(std::size_t n, const F& f) {
  if (n == 0) return 0.0;
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  if (nblocks == 1) return detail::pairwise_range(0, n, f);
  std::vector<double> partials(nblocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
    const std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
    partials[static_cast<std::size_t>(b)] = detail::pairwise_range(lo, hi, f);
  }
  return detail::combine_partials(partials);
}

template <class F>
double det_sum(std::size_t n, const F& f, bool parallel = true) {
  return parallel ? det_sum_parallel(n, f) : det_sum_serial(n, f);
}

}  // namespace afs
