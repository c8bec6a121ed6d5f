#include <cmath>
#include <random>
#include <stdexcept>

#include "anisofrac/energy.hpp"
#include "anisofrac/reduce.hpp"
#include "anisofrac/sample.hpp"
#include "anisofrac/transform.hpp"
#include "doctest.h"

using namespace afs;

namespace {

GridSpec line_grid(double a, double b, int cells, int margin) {
  GridSpec g;
  g.dim = 1;
  g.lo = {a};
  g.hi = {b};
  g.cells = {cells};
  g.margin = {margin};
  return g;
}

// interior noise with the given clearance beyond the margin
GridFunction noise(const GridSpec& g, unsigned seed, int clearance) {
  GridFunction u(g);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    bool inside = !u.is_margin(i);
    std::size_t flat = i;
    for (int a = g.dim - 1; a >= 0; --a) {
      const int idx = static_cast<int>(flat % static_cast<std::size_t>(g.cells[a]));
      flat /= static_cast<std::size_t>(g.cells[a]);
      if (idx < g.margin[a] + clearance || idx >= g.cells[a] - g.margin[a] - clearance)
        inside = false;
    }
    if (inside) u.values[i] = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
  }
  return u;
}

double mass(const GridFunction& u) {
  return det_sum(u.values.size(), [&](std::size_t i) { return u.values[i]; }) *
         u.spec.cell_volume();
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("mollify: zero stays zero, mass is preserved") {
    const GridSpec g = line_grid(-2.0, 2.0, 256, 6);
    GridFunction zero(g);
    const GridFunction mz = mollify(zero, 2);
    for (double v : mz.values) CHECK(v == 0.0);

    const GridFunction u = noise(g, 21, 4);
    const GridFunction mu = mollify(u, 3);
    CHECK(mass(mu) == doctest::Approx(mass(u)).epsilon(1e-12));
    mu.check_invariants();
  }

  TEST_CASE("mollify rejects radius beyond the margin or support without clearance") {
    const GridSpec g = line_grid(-2.0, 2.0, 256, 3);
    const GridFunction u = noise(g, 22, 2);
    CHECK_THROWS_WITH_AS(mollify(u, 4), doctest::Contains("margin"), std::invalid_argument);
    // support touches the non-margin boundary: radius-2 convolution must refuse
    const GridFunction tight = noise(g, 23, 0);
    CHECK_THROWS_WITH_AS(mollify(tight, 2), doctest::Contains("support"),
                         std::invalid_argument);
  }

  TEST_CASE("mollification never increases the directional energy") {
    const GridSpec g = line_grid(-2.0, 2.0, 512, 6);
    QuadratureSpec quad;
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
      const GridFunction u = noise(g, seed, 4);
      const GridFunction mu = mollify(u, 2);
      for (double p : {1.5, 2.0, 3.0})
        for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
          const double ju = directional_energy(u, 0, s, p, quad);
          const double jm = directional_energy(mu, 0, s, p, quad);
          CHECK(jm <= ju * (1.0 + 1e-9));
        }
    }
  }

  TEST_CASE("truncate: large k is the identity, zero stays zero") {
    const GridSpec g = line_grid(-2.0, 2.0, 256, 4);
    const GridFunction u = noise(g, 31, 2);
    const GridFunction t = truncate(u, 10.0);  // 2 - |x|/10 >= 1 on the box
    CHECK(t.values == u.values);
    GridFunction zero(g);
    const GridFunction tz = truncate(zero, 0.5);
    for (double v : tz.values) CHECK(v == 0.0);
    CHECK_THROWS_AS(truncate(u, 0.0), std::invalid_argument);
  }

  TEST_CASE("truncation energy bound with the assembled constant") {
    const GridSpec g = line_grid(-2.0, 2.0, 512, 6);
    QuadratureSpec quad;
    for (unsigned seed : {11u, 12u, 13u}) {
      const GridFunction u = noise(g, seed, 4);
      for (double k : {0.5, 1.0}) {
        const GridFunction ut = truncate(u, k);
        for (double p : {1.5, 2.0, 3.0}) {
          const double np = lp_norm_pow(u, p);
          for (double s : {0.2, 0.5, 0.8}) {
            const double ju = directional_energy(u, 0, s, p, quad);
            const double jt = directional_energy(ut, 0, s, p, quad);
            CHECK(jt <= truncation_constant(p) * (ju + np) * (1.0 + 1e-6));
          }
        }
      }
    }
  }

  TEST_CASE("truncation constant value") {
    CHECK(truncation_constant(2.0) == doctest::Approx(14.0).epsilon(1e-15));
  }
}
