#include "anisofrac/reduce.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace afs {

namespace {
int g_max_threads = 0;
}

void set_max_threads(int n) {
  g_max_threads = n < 0 ? 0 : n;
#ifdef _OPENMP
  if (g_max_threads > 0) omp_set_num_threads(g_max_threads);
#endif
}

int max_threads() {
#ifdef _OPENMP
  return g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

double combine_partials(std::vector<double>& partials) {
  // In-place halving keeps the combine order fixed for any partial count.
  std::size_t n = partials.size();
  while (n > 1) {
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i)
      partials[i] = partials[2 * i] + partials[2 * i + 1];
    if (n % 2 == 1) {
      partials[half] = partials[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return partials[0];
}

}  // namespace detail

}  // namespace afs
