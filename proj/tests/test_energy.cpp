// Energy oracles: the indicator and tent closed forms fix the expected
// values; everything here is computed independently of the library's
// quadrature path before being compared against it.

#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

#include "anisofrac/energy.hpp"
#include "anisofrac/sample.hpp"
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

GridFunction unit_indicator(int cells) {
  Expression ind;
  ind.kind = "indicator";
  ind.box_lo = {0.0};
  ind.box_hi = {1.0};
  return sample(ind, line_grid(-4.0, 4.0, cells, 8));
}

GridFunction unit_tent(int cells) {
  Expression tent;
  tent.kind = "tent";
  tent.center = {0.0};
  tent.width = {2.0};  // max(0, 1 - |x|)
  return sample(tent, line_grid(-4.0, 4.0, cells, 8));
}

// J_{s,p} of the unit indicator: F(h) = 2 min(|h|, 1), so for s p < 1
//   J = 2 s (1-s) [ 2/(1-sp) + 2/(sp) ]
double indicator_energy(double s, double p) {
  const double sp = s * p;
  REQUIRE(sp < 1.0);
  return 4.0 * s * (1.0 - s) * (1.0 / (1.0 - sp) + 1.0 / sp);
}

// J_{s,2} of the tent max(0, 1-|x|): F(h) = 2h^2 - h^3 on [0,1],
// 4/3 - (2-h)^3/3 on [1,2], 4/3 beyond. The middle piece is integrated by
// Simpson with enough panels to be negligible against the assert tolerance.
double tent_energy_p2(double s) {
  const double first = 2.0 / (2.0 - 2.0 * s) - 1.0 / (3.0 - 2.0 * s);
  auto f = [&](double h) {
    const double F = 4.0 / 3.0 - std::pow(2.0 - h, 3.0) / 3.0;
    return F * std::pow(h, -1.0 - 2.0 * s);
  };
  const int n = 4000;  // Simpson panels over [1,2]
  double mid = f(1.0) + f(2.0);
  for (int i = 1; i < 2 * n; ++i) {
    const double h = 1.0 + 0.5 * i / n;
    mid += (i % 2 == 1 ? 4.0 : 2.0) * f(h);
  }
  mid *= (0.5 / n) / 3.0;
  const double tail = (4.0 / 3.0) * std::pow(2.0, -2.0 * s) / (2.0 * s);
  return 2.0 * s * (1.0 - s) * (first + mid + tail);
}

}  // namespace

TEST_SUITE("energy") {
  TEST_CASE("difference profile of the zero function vanishes") {
    Expression zero;
    const GridFunction u = sample(zero, line_grid(-4.0, 4.0, 256, 4));
    for (double h : {0.01, 0.5, 3.0}) CHECK(difference_profile(u, 0, h, 2.0) == 0.0);
  }

  TEST_CASE("difference profile of the unit indicator: F(h) = 2 min(|h|,1)") {
    const GridFunction u = unit_indicator(1024);
    CHECK(difference_profile(u, 0, 0.5, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(difference_profile(u, 0, 0.25, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(difference_profile(u, 0, 2.0, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
    // symmetry in the sign of h
    CHECK(difference_profile(u, 0, 0.37, 2.0) == difference_profile(u, 0, -0.37, 2.0));
  }

  TEST_CASE("difference profile beyond the support diameter is exactly 2 ||u||_p^p") {
    const GridFunction u = unit_tent(512);
    for (double p : {1.5, 2.0, 3.0}) {
      const double want = 2.0 * lp_norm_pow(u, p);
      const double dx = u.spec.spacing(0);
      CHECK(difference_profile(u, 0, 2.0 + 2.0 * dx, p) == want);
      CHECK(difference_profile(u, 0, 5.0, p) == want);
    }
  }

  TEST_CASE("indicator energy matches the closed form") {
    const GridFunction u = unit_indicator(2048);
    QuadratureSpec quad;
    for (double s : {0.1, 0.25, 0.4}) {
      const auto parts = directional_energy_parts(u, 0, s, 2.0, quad);
      CHECK(parts.value == doctest::Approx(indicator_energy(s, 2.0)).epsilon(5e-4));
      CHECK(parts.value == parts.near + parts.mid + parts.tail);
      CHECK(parts.near >= 0.0);
      CHECK(parts.mid >= 0.0);
      CHECK(parts.tail >= 0.0);
    }
    // p != 2: the symmetric-difference profile does not depend on p
    const auto v = directional_energy(u, 0, 0.3, 1.5, quad);
    CHECK(v == doctest::Approx(indicator_energy(0.3, 1.5)).epsilon(5e-4));
  }

  TEST_CASE("tent energy matches the closed form at interior s") {
    // the profile is chord-interpolated between integer shifts, so smooth
    // profiles carry an O(dx^{2-2s}) bias; the refinement case below checks
    // that it shrinks
    const GridFunction u = unit_tent(2048);
    QuadratureSpec quad;
    for (double s : {0.3, 0.6, 0.8})
      CHECK(directional_energy(u, 0, s, 2.0, quad) ==
            doctest::Approx(tent_energy_p2(s)).epsilon(5e-3));
  }

  TEST_CASE("s = 1 branch is the discrete gradient energy") {
    const GridFunction u = unit_tent(2048);
    // independent stencil evaluation
    const double dx = u.spec.spacing(0);
    double c = 0.0;
    for (std::size_t j = 0; j + 1 < u.values.size(); ++j) {
      const double m = (u.values[j + 1] - u.values[j]) / dx;
      c += std::abs(m) * std::abs(m) * dx;
    }
    QuadratureSpec quad;
    CHECK(directional_energy(u, 0, 1.0, 2.0, quad) == doctest::Approx(c).epsilon(1e-12));
    CHECK(c == doctest::Approx(2.0).epsilon(3.0 * dx));
  }

  TEST_CASE("fractional energies approach the s = 1 branch from below on the tent") {
    const GridFunction u = unit_tent(4096);
    QuadratureSpec quad;
    const double j1 = directional_energy(u, 0, 1.0, 2.0, quad);
    double prev = 0.0;
    for (double s : {0.9, 0.99, 0.999}) {
      const double js = directional_energy(u, 0, s, 2.0, quad);
      CHECK(js > prev);
      CHECK(js < j1 * 1.001);
      prev = js;
    }
    CHECK(std::abs(prev - 2.0) / 2.0 < 0.02);
  }

  TEST_CASE("degree-p homogeneity of the directional energy") {
    const GridFunction u = unit_tent(512);
    QuadratureSpec quad;
    for (double p : {1.5, 2.0, 3.0}) {
      GridFunction w = u;
      for (double& v : w.values) v *= -3.0;
      const double a = directional_energy(w, 0, 0.45, p, quad);
      const double b = std::pow(3.0, p) * directional_energy(u, 0, 0.45, p, quad);
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
  }

  TEST_CASE("translation by whole cells leaves the energy unchanged") {
    const GridSpec g = line_grid(-4.0, 4.0, 1024, 8);
    Expression tent;
    tent.kind = "tent";
    tent.width = {2.0};
    tent.center = {0.0};
    const GridFunction a = sample(tent, g);
    tent.center = {0.25};  // 32 cells at this spacing
    const GridFunction b = sample(tent, g);
    QuadratureSpec quad;
    for (double s : {0.2, 0.7}) {
      const double ja = directional_energy(a, 0, s, 2.0, quad);
      const double jb = directional_energy(b, 0, s, 2.0, quad);
      CHECK(ja == doctest::Approx(jb).epsilon(1e-12));
    }
  }

  TEST_CASE("reflection across the box midplane leaves the energy unchanged") {
    const GridSpec g = line_grid(-4.0, 4.0, 512, 8);
    Expression e;
    e.kind = "bump";
    e.center = {-0.7};
    e.width = {1.0};
    GridFunction u = sample(e, g);
    e.center = {0.3};
    e.width = {0.6};
    const GridFunction v = sample(e, g);
    for (std::size_t i = 0; i < u.values.size(); ++i) u.values[i] += 0.5 * v.values[i];
    GridFunction r(g);
    for (std::size_t i = 0; i < u.values.size(); ++i)
      r.values[i] = u.values[u.values.size() - 1 - i];
    QuadratureSpec quad;
    for (double p : {2.0, 3.0}) {
      const double ju = directional_energy(u, 0, 0.55, p, quad);
      const double jr = directional_energy(r, 0, 0.55, p, quad);
      CHECK(ju == doctest::Approx(jr).epsilon(1e-12));
    }
  }

  TEST_CASE("total energy: zero function, tensor symmetry, weighted sum") {
    GridSpec g;
    g.dim = 2;
    g.lo = {-2.0, -2.0};
    g.hi = {2.0, 2.0};
    g.cells = {160, 160};
    g.margin = {4, 4};
    Expression zero;
    AnisoParams prm;
    prm.s = {0.4, 0.4};
    prm.p = {2.0, 2.0};
    QuadratureSpec quad;
    const auto z = total_energy(sample(zero, g), prm, quad);
    CHECK(z.total == 0.0);
    CHECK(z.per_direction[0] == 0.0);
    CHECK(z.per_direction[1] == 0.0);

    Expression bump;
    bump.kind = "bump";
    bump.center = {0.0, 0.0};
    bump.width = {1.5, 1.5};
    const GridFunction u = sample(bump, g);
    const auto br = total_energy(u, prm, quad);
    CHECK(br.per_direction[0] == doctest::Approx(br.per_direction[1]).epsilon(1e-12));
    CHECK(br.total ==
          doctest::Approx(br.per_direction[0] / 2.0 + br.per_direction[1] / 2.0)
              .epsilon(1e-15));
    for (int i = 0; i < 2; ++i) {
      CHECK(br.near_part[static_cast<std::size_t>(i)] >= 0.0);
      CHECK(br.mid_part[static_cast<std::size_t>(i)] >= 0.0);
      CHECK(br.tail_part[static_cast<std::size_t>(i)] >= 0.0);
    }
  }

  TEST_CASE("refinement shrinks the change in the computed energy") {
    QuadratureSpec coarse;
    QuadratureSpec fine;
    fine.ratio = std::sqrt(coarse.ratio);
    fine.nodes_per_interval = 4;
    const double j1 = directional_energy(unit_tent(512), 0, 0.6, 2.0, coarse);
    const double j2 = directional_energy(unit_tent(1024), 0, 0.6, 2.0, fine);
    QuadratureSpec finer;
    finer.ratio = std::sqrt(fine.ratio);
    finer.nodes_per_interval = 5;
    const double j3 = directional_energy(unit_tent(2048), 0, 0.6, 2.0, finer);
    CHECK(std::abs(j3 - j2) < std::abs(j2 - j1));
    // Richardson estimate against the analytic value
    CHECK(std::abs(j3 - tent_energy_p2(0.6)) < std::abs(j1 - tent_energy_p2(0.6)));
  }

  TEST_CASE("parameter validation") {
    const GridFunction u = unit_tent(256);
    QuadratureSpec quad;
    CHECK_THROWS_AS(directional_energy(u, 0, 0.0, 2.0, quad), std::invalid_argument);
    CHECK_THROWS_AS(directional_energy(u, 0, 1.5, 2.0, quad), std::invalid_argument);
    CHECK_THROWS_AS(directional_energy(u, 0, 0.5, 1.0, quad), std::invalid_argument);
    QuadratureSpec bad;
    bad.ratio = 1.0;
    CHECK_THROWS_AS(directional_energy(u, 0, 0.5, 2.0, bad), std::invalid_argument);
    bad = QuadratureSpec{};
    bad.near_cut = 0.0;
    CHECK_THROWS_AS(directional_energy(u, 0, 0.5, 2.0, bad), std::invalid_argument);
  }
}
