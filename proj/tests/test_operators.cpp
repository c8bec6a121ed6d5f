// Derivative checks: Euler identities hold exactly by construction, the
// central-difference oracle pins the Gateaux pairing, and the gradient's
// Riesz property is checked against the independent pairing implementation.

#include <cmath>
#include <random>
#include <stdexcept>

#include "anisofrac/operators.hpp"
#include "anisofrac/sample.hpp"
#include "doctest.h"

using namespace afs;

namespace {

GridSpec square_grid(int n, int margin) {
  GridSpec g;
  g.dim = 2;
  g.lo = {-2.0, -2.0};
  g.hi = {2.0, 2.0};
  g.cells = {n, n};
  g.margin = {margin, margin};
  return g;
}

GridFunction noise(const GridSpec& g, unsigned seed) {
  GridFunction u(g);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < u.values.size(); ++i)
    if (!u.is_margin(i))
      u.values[i] = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
  return u;
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("gateaux pairing vanishes against the zero direction") {
    const GridSpec g = square_grid(32, 2);
    const GridFunction u = noise(g, 3);
    GridFunction zero(g);
    QuadratureSpec quad;
    CHECK(gateaux_energy(u, zero, 0, 0.4, 2.0, quad) == 0.0);
    CHECK(gateaux_energy(u, zero, 1, 1.0, 3.0, quad) == 0.0);
  }

  TEST_CASE("Euler identity: <(J^i)'(u), u> = p J^i(u)") {
    const GridSpec g = square_grid(40, 2);
    const GridFunction u = noise(g, 5);
    QuadratureSpec quad;
    for (double p : {1.5, 2.0, 3.0})
      for (double s : {0.3, 0.7, 1.0}) {
        const double eps = default_epsilon(p, 1.0);
        const double lhs = gateaux_energy(u, u, 0, s, p, quad, eps);
        const double rhs = p * directional_energy(u, 0, s, p, quad, eps);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      }
  }

  TEST_CASE("central finite differences match the Gateaux pairing") {
    const GridSpec g = square_grid(24, 2);
    const GridFunction u = noise(g, 7);
    const GridFunction v = noise(g, 8);
    QuadratureSpec quad;
    const double fd_eps = 1e-5;
    for (double s : {0.3, 0.7, 1.0}) {
      for (double p : {2.0, 3.0}) {
        const double eps = default_epsilon(p, 1.0);
        GridFunction up = u, um = u;
        for (std::size_t i = 0; i < u.values.size(); ++i) {
          up.values[i] += fd_eps * v.values[i];
          um.values[i] -= fd_eps * v.values[i];
        }
        const double fd = (directional_energy(up, 0, s, p, quad, eps) -
                           directional_energy(um, 0, s, p, quad, eps)) /
                          (2.0 * fd_eps);
        const double ga = gateaux_energy(u, v, 0, s, p, quad, eps);
        const double tol = p == 2.0 ? 1e-6 : 1e-4;
        CHECK(ga == doctest::Approx(fd).epsilon(tol));
      }
    }
  }

  TEST_CASE("gradient pairing agrees with the Gateaux implementation") {
    const GridSpec g = square_grid(28, 2);
    const GridFunction u = noise(g, 11);
    const GridFunction v = noise(g, 12);  // vanishes outside the domain
    QuadratureSpec quad;
    AnisoParams prm;
    prm.s = {0.4, 0.8};
    prm.p = {2.0, 3.0};
    const GridFunction grad = energy_gradient(u, prm, quad);
    const double lhs = inner(grad, v);
    double rhs = 0.0;
    for (int i = 0; i < 2; ++i)
      rhs += gateaux_energy(u, v, i, prm.s[static_cast<std::size_t>(i)],
                            prm.p[static_cast<std::size_t>(i)], quad) /
             prm.p[static_cast<std::size_t>(i)];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }

  TEST_CASE("Euler identity across the total energy") {
    const GridSpec g = square_grid(30, 2);
    const GridFunction u = noise(g, 13);
    QuadratureSpec quad;
    AnisoParams prm;
    prm.s = {0.5, 0.9};
    prm.p = {2.0, 2.5};
    double lhs = 0.0, rhs = 0.0;
    const auto br = total_energy(u, prm, quad);
    for (int i = 0; i < 2; ++i) {
      lhs += gateaux_energy(u, u, i, prm.s[static_cast<std::size_t>(i)],
                            prm.p[static_cast<std::size_t>(i)], quad) /
             prm.p[static_cast<std::size_t>(i)];
      rhs += br.per_direction[static_cast<std::size_t>(i)];
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }

  TEST_CASE("local p=2 gradient is the 5-point Laplacian") {
    const GridSpec g = square_grid(20, 2);
    const GridFunction u = noise(g, 17);
    QuadratureSpec quad;
    AnisoParams prm;
    prm.s = {1.0, 1.0};
    prm.p = {2.0, 2.0};
    const GridFunction grad = energy_gradient(u, prm, quad);
    const double dx = g.spacing(0), dy = g.spacing(1);
    const int n = g.cells[0];
    auto at = [&](int i, int j) -> double {
      if (i < 0 || j < 0 || i >= n || j >= n) return 0.0;
      return u.values[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::size_t flat = static_cast<std::size_t>(i) * n + j;
        if (u.is_margin(flat)) {
          CHECK(grad.values[flat] == 0.0);
          continue;
        }
        const double lap = (2.0 * at(i, j) - at(i - 1, j) - at(i + 1, j)) / (dx * dx) +
                           (2.0 * at(i, j) - at(i, j - 1) - at(i, j + 1)) / (dy * dy);
        CHECK(grad.values[flat] == doctest::Approx(lap).epsilon(1e-12));
      }
  }

  TEST_CASE("pairing symmetry in the quadratic case") {
    const GridSpec g = square_grid(26, 2);
    const GridFunction u = noise(g, 19);
    const GridFunction v = noise(g, 23);
    QuadratureSpec quad;
    for (double s : {0.35, 1.0}) {
      const double a = gateaux_energy(u, v, 0, s, 2.0, quad);
      const double b = gateaux_energy(v, u, 0, s, 2.0, quad);
      CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
  }

  TEST_CASE("monotonicity of the operator") {
    const GridSpec g = square_grid(22, 2);
    QuadratureSpec quad;
    AnisoParams prm;
    prm.s = {0.45, 0.75};
    prm.p = {2.0, 3.0};
    for (unsigned seed : {29u, 31u, 37u}) {
      const GridFunction u = noise(g, seed);
      const GridFunction v = noise(g, seed + 100);
      GridFunction du = u;
      for (std::size_t i = 0; i < du.values.size(); ++i) du.values[i] -= v.values[i];
      const GridFunction gu = energy_gradient(u, prm, quad);
      const GridFunction gv = energy_gradient(v, prm, quad);
      GridFunction dg = gu;
      for (std::size_t i = 0; i < dg.values.size(); ++i) dg.values[i] -= gv.values[i];
      const double pairing = inner(dg, du);
      const double scale = inner(gu, gu) + inner(du, du);
      CHECK(pairing >= -1e-10 * scale);
    }
  }

  TEST_CASE("gradient check for p < 2 with the documented regularization") {
    const GridSpec g = square_grid(20, 2);
    const GridFunction u = noise(g, 41);
    const GridFunction v = noise(g, 43);
    QuadratureSpec quad;
    const double p = 1.5;
    const double eps = default_epsilon(p, 1.0);
    CHECK(eps == doctest::Approx(1e-8).epsilon(1e-12));
    CHECK(default_epsilon(2.0, 1.0) == 0.0);
    const double fd_eps = 1e-5;
    GridFunction up = u, um = u;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
      up.values[i] += fd_eps * v.values[i];
      um.values[i] -= fd_eps * v.values[i];
    }
    for (double s : {0.3, 0.7, 1.0}) {
      const double fd = (directional_energy(up, 0, s, p, quad, eps) -
                         directional_energy(um, 0, s, p, quad, eps)) /
                        (2.0 * fd_eps);
      const double ga = gateaux_energy(u, v, 0, s, p, quad, eps);
      CHECK(ga == doctest::Approx(fd).epsilon(1e-4));
    }
  }

  TEST_CASE("nonlinearity evaluation") {
    Nonlinearity nl;
    nl.q = 4.0;
    const auto at0 = nonlinearity_eval(nl, 1.0, 0.0);
    CHECK(at0.f == 0.0);
    CHECK(at0.F == 0.0);
    const auto at2 = nonlinearity_eval(nl, 1.0, 2.0);
    CHECK(at2.f == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(at2.F == doctest::Approx(4.0).epsilon(1e-15));
    const auto atm = nonlinearity_eval(nl, 1.0, -1.3);
    const auto atp = nonlinearity_eval(nl, 1.0, 1.3);
    CHECK(atm.f == -atp.f);
    CHECK(atm.F == atp.F);
  }

  TEST_CASE("Ambrosetti-Rabinowitz identity for the pure power law") {
    Nonlinearity nl;
    nl.q = 3.5;
    for (double z : {-2.0, -0.3, 0.4, 5.0}) {
      const auto e = nonlinearity_eval(nl, 1.2, z);
      CHECK(nl.ar_mu() * e.F == doctest::Approx(z * e.f).epsilon(1e-14));
    }
  }

  TEST_CASE("residual of the zero iterate is the source norm") {
    const GridSpec g = square_grid(24, 2);
    QuadratureSpec quad;
    AnisoParams prm;
    prm.s = {0.6, 0.6};
    prm.p = {2.0, 2.0};
    Expression bump;
    bump.kind = "bump";
    bump.center = {0.0, 0.0};
    bump.width = {2.0, 2.0};
    const GridFunction f = sample(bump, g);
    GridFunction zero(g);
    CHECK(residual(zero, prm, f, quad) == doctest::Approx(lp_norm(f, 2.0)).epsilon(1e-12));
  }

  TEST_CASE("dimension mismatch is rejected") {
    const GridSpec g = square_grid(16, 2);
    const GridFunction u = noise(g, 51);
    AnisoParams prm;
    prm.s = {0.5};
    prm.p = {2.0};
    QuadratureSpec quad;
    CHECK_THROWS_AS(energy_gradient(u, prm, quad), std::invalid_argument);
  }
}
