#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <cstdio>
#include <random>

#include "anisofrac/params.hpp"
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

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("spec validation names the offending field") {
    GridSpec g = line_grid(0.0, 1.0, 16, 1);
    g.hi = {0.0};
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("bounds"), std::invalid_argument);
    g = line_grid(0.0, 1.0, 1, 1);
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("cells"), std::invalid_argument);
    g = line_grid(0.0, 1.0, 16, 0);
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("margin"), std::invalid_argument);
    g = line_grid(0.0, 1.0, 16, 8);
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("interior"), std::invalid_argument);
  }

  TEST_CASE("zero expression samples to the zero function") {
    Expression zero;
    const GridFunction u = sample(zero, line_grid(-4.0, 4.0, 256, 4));
    for (double v : u.values) CHECK(v == 0.0);
  }

  TEST_CASE("indicator of [0,1] on [-4,4], N=1024: 128 ones per unit length") {
    Expression ind;
    ind.kind = "indicator";
    ind.box_lo = {0.0};
    ind.box_hi = {1.0};
    const GridFunction u = sample(ind, line_grid(-4.0, 4.0, 1024, 8));
    const long ones = std::count(u.values.begin(), u.values.end(), 1.0);
    const long zeros = std::count(u.values.begin(), u.values.end(), 0.0);
    CHECK(ones == 128);
    CHECK(ones + zeros == 1024);
  }

  TEST_CASE("tensor bump centered mid-box is symmetric with its peak at the center") {
    GridSpec g;
    g.dim = 2;
    // spacing 2^-5: node coordinates are exact, so the sampled array is
    // bitwise symmetric and a node sits exactly at the center
    g.lo = {-1.015625, -1.015625};
    g.hi = {1.015625, 1.015625};
    g.cells = {65, 65};
    g.margin = {2, 2};
    Expression bump;
    bump.kind = "bump";
    bump.center = {0.0, 0.0};
    bump.width = {1.0, 1.0};
    const GridFunction u = sample(bump, g);
    const double peak = *std::max_element(u.values.begin(), u.values.end());
    const std::size_t center = (65 / 2) * 65 + 65 / 2;
    CHECK(u.values[center] == peak);
    CHECK(peak == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    for (int i = 0; i < 65; ++i)
      for (int j = 0; j < 65; ++j) {
        const double a = u.values[static_cast<std::size_t>(i) * 65 + j];
        const double b = u.values[static_cast<std::size_t>(64 - i) * 65 + (64 - j)];
        CHECK(a == b);
      }
  }

  TEST_CASE("support exceeding the non-margin region is rejected naming the axis") {
    Expression ind;
    ind.kind = "indicator";
    ind.box_lo = {-4.0};
    ind.box_hi = {1.0};
    CHECK_THROWS_WITH_AS(sample(ind, line_grid(-4.0, 4.0, 1024, 8)),
                         doctest::Contains("axis 0"), std::invalid_argument);
  }

  TEST_CASE("lp_norm: zero function, indicator, homogeneity") {
    const GridSpec g = line_grid(-4.0, 4.0, 1024, 8);
    Expression zero;
    CHECK(lp_norm(sample(zero, g), 2.0) == 0.0);

    Expression ind;
    ind.kind = "indicator";
    ind.box_lo = {0.0};
    ind.box_hi = {1.0};
    GridFunction u = sample(ind, g);
    // integral of 1 over [0,1]; off by at most one cell of boundary smearing
    CHECK(std::abs(lp_norm(u, 2.0) - 1.0) < g.spacing(0));

    GridFunction w = u;
    for (double& v : w.values) v *= -3.0;
    for (double p : {1.5, 2.0, 3.0})
      CHECK(lp_norm(w, p) ==
            doctest::Approx(std::pow(3.0, 1.0) * lp_norm(u, p)).epsilon(1e-12));

    CHECK_THROWS_AS(lp_norm(u, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lp_norm(u, 0.5), std::invalid_argument);
  }

  TEST_CASE("aniso_summary hand values") {
    AnisoParams prm;
    prm.s = {0.5, 0.5};
    prm.p = {2.0, 2.0};
    const auto s = aniso_summary(prm, 2);
    CHECK(s.s_bar == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.sp_bar == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.p_star == doctest::Approx(4.0).epsilon(1e-15));
    CHECK_FALSE(s.supercritical);
  }

  TEST_CASE("aniso_summary supercritical branch") {
    AnisoParams prm;
    prm.s = {1.0, 1.0};
    prm.p = {2.0, 2.0};
    const auto s = aniso_summary(prm, 2);
    CHECK(s.supercritical);
    CHECK(std::isnan(s.p_star));
    CHECK(std::isinf(s.p_star_or_inf()));
  }

  TEST_CASE("aniso_summary reduces to the classical exponent for equal parameters") {
    AnisoParams prm;
    prm.s = {0.4, 0.4, 0.4};
    prm.p = {2.5, 2.5, 2.5};
    const auto s = aniso_summary(prm, 3);
    // n p / (n - s p) with n = 3
    CHECK(s.p_star == doctest::Approx(3.0 * 2.5 / (3.0 - 0.4 * 2.5)).epsilon(1e-14));
  }

  TEST_CASE("aniso_summary is permutation-equivariant") {
    AnisoParams prm;
    prm.s = {0.3, 0.7, 0.5};
    prm.p = {1.8, 2.2, 3.5};
    const auto a = aniso_summary(prm, 3);
    std::vector<int> perm{2, 0, 1};
    AnisoParams prm2;
    for (int i : perm) {
      prm2.s.push_back(prm.s[static_cast<std::size_t>(i)]);
      prm2.p.push_back(prm.p[static_cast<std::size_t>(i)]);
    }
    const auto b = aniso_summary(prm2, 3);
    CHECK(a.s_bar == doctest::Approx(b.s_bar).epsilon(1e-15));
    CHECK(a.sp_bar == doctest::Approx(b.sp_bar).epsilon(1e-15));
    CHECK(a.p_star == doctest::Approx(b.p_star).epsilon(1e-15));
  }

  TEST_CASE("params validation names the entry") {
    AnisoParams prm;
    prm.s = {0.5, 1.5};
    prm.p = {2.0, 2.0};
    CHECK_THROWS_WITH_AS(prm.validate(), doctest::Contains("params.s[1] outside (0,1]"),
                         std::invalid_argument);
    prm.s = {0.5, 0.5};
    prm.p = {2.0, 1.0};
    CHECK_THROWS_WITH_AS(prm.validate(), doctest::Contains("params.p[1]"),
                         std::invalid_argument);
  }

  TEST_CASE("grid csv round-trips") {
    GridSpec g;
    g.dim = 2;
    g.lo = {-1.0, 0.0};
    g.hi = {1.0, 2.0};
    g.cells = {12, 9};
    g.margin = {1, 2};
    GridFunction u(g);
    std::mt19937_64 rng(5);
    for (std::size_t i = 0; i < u.values.size(); ++i)
      if (!u.is_margin(i)) u.values[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const std::string path = "roundtrip_grid.csv";
    write_grid_csv(u, path);
    const GridFunction v = read_grid_csv(path);
    CHECK(v.spec == u.spec);
    CHECK(v.values == u.values);
    std::remove(path.c_str());
  }

  TEST_CASE("aligned grid puts lattice nodes on the domain boundary") {
    const GridSpec g = aligned_grid(1, 0.0, 1.0, 64, 2);
    GridFunction u(g);
    // node value closest to x = 0 must be exactly at 0 and inside the margin
    bool found0 = false, found1 = false;
    for (int i = 0; i < g.cells[0]; ++i) {
      const double x = g.node_coord(0, i);
      if (std::abs(x) < 1e-13) {
        found0 = true;
        CHECK(u.is_margin(static_cast<std::size_t>(i)));
      }
      if (std::abs(x - 1.0) < 1e-13) {
        found1 = true;
        CHECK(u.is_margin(static_cast<std::size_t>(i)));
      }
    }
    CHECK(found0);
    CHECK(found1);
  }
}
