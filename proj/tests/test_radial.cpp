#include "radial/eigensolver.hpp"
#include "radial/grid.hpp"
#include "radial/poisson.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace lhfatom::radial;
using Catch::Approx;

TEST_CASE("grid endpoints and validation") {
  const auto g = build_grid(2.0, 600, 40.0);
  CHECK(g.size() == 600);
  CHECK(g.r.front() == Approx(5.0e-7).epsilon(1e-14));
  CHECK(g.r.back() == Approx(40.0).epsilon(1e-14));
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    const double ratio = g.r[i + 1] / g.r[i];
    CHECK(ratio == Approx(g.r[1] / g.r[0]).epsilon(1e-10));
  }

  CHECK_THROWS_AS(build_grid(0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(1.0, 600, 5.0), std::invalid_argument);
}

TEST_CASE("quadrature of the 1s density is exact to 1e-10") {
  const auto g = build_grid(1.0);
  std::vector<double> f(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    f[i] = 4.0 * g.r[i] * g.r[i] * std::exp(-2.0 * g.r[i]);
  CHECK(integrate(g, f) == Approx(1.0).epsilon(1e-10));

  std::vector<double> e2(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    e2[i] = std::exp(-2.0 * g.r[i]) * g.r[i] * g.r[i];
  CHECK(integrate(g, e2) == Approx(0.25).epsilon(1e-10));
}

TEST_CASE("tampered grid is rejected") {
  auto g = build_grid(1.0);
  std::vector<double> f(g.size(), 1.0);
  std::reverse(g.r.begin(), g.r.end());
  CHECK_THROWS_AS(integrate(g, f), std::invalid_argument);
}

TEST_CASE("hartree potential of the hydrogenic 1s density") {
  const auto g = build_grid(1.0);
  const auto u = oracles::u_1s(g, 1.0);
  std::vector<double> n(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    n[i] = u[i] * u[i];
  const auto vh = hartree_potential(g, n);

  // closed form 1/r - exp(-2r)(1 + 1/r); near r = 1 that is ~0.72933
  double max_err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    max_err = std::max(max_err,
                       std::abs(vh[i] - oracles::v_hartree_1s(1.0, g.r[i])));
  CHECK(max_err < 1.0e-4); // pointwise trapezoid accuracy of the partial sums
  std::size_t i1 = 0;
  while (g.r[i1] < 1.0)
    ++i1;
  CHECK(vh[i1] == Approx(oracles::v_hartree_1s(1.0, g.r[i1])).margin(5e-5));
  CHECK(oracles::v_hartree_1s(1.0, 1.0) == Approx(0.72933).margin(5e-6));

  // Gauss law: r * vH -> enclosed charge
  CHECK(g.r.back() * vh.back() == Approx(1.0).margin(1e-8));

  SECTION("zero density gives zero potential") {
    const auto v0 = hartree_potential(g, std::vector<double>(g.size(), 0.0));
    for (double v : v0)
      CHECK(v == 0.0);
  }
  SECTION("negative density is rejected") {
    auto bad = n;
    bad[100] = -1.0e-6;
    CHECK_THROWS_AS(hartree_potential(g, bad), std::domain_error);
  }
}

TEST_CASE("bound states of Coulomb potentials") {
  const auto g = build_grid(2.0);
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    v[i] = -2.0 / g.r[i];

  const auto s = solve_bound_states(g, v, 0, 3);
  REQUIRE(s.size() == 3);
  CHECK(s[0].eps == Approx(-2.0).margin(1e-8));
  CHECK(s[1].eps == Approx(-0.5).margin(1e-8));
  CHECK(s[2].eps == Approx(-2.0 / 9.0).margin(1e-8));
  CHECK(s[0].nodes == 0);
  CHECK(s[1].nodes == 1);
  CHECK(s[2].nodes == 2);
  for (const auto &st : s)
    CHECK(integrate_product(g, st.u, st.u) == Approx(1.0).epsilon(1e-12));

  SECTION("l = 1 hydrogen") {
    const auto g1 = build_grid(1.0);
    std::vector<double> v1(g1.size());
    for (std::size_t i = 0; i < g1.size(); ++i)
      v1[i] = -1.0 / g1.r[i];
    const auto p = solve_bound_states(g1, v1, 1, 1);
    REQUIRE(p.size() == 1);
    CHECK(p[0].eps == Approx(-0.125).margin(1e-8));
    CHECK(p[0].nodes == 0);
  }

  SECTION("eigenfunction matches the analytic 1s") {
    const auto u_ref = oracles::u_1s(g, 2.0);
    double dot = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      dot += g.w[i] * s[0].u[i] * u_ref[i];
    CHECK(dot == Approx(1.0).margin(1e-8));
  }
}

TEST_CASE("shallow potential reports fewer bound states") {
  const auto g = build_grid(1.0);
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    v[i] = -std::exp(-g.r[i]) / g.r[i]; // Yukawa: one bound s state
  const auto s = solve_bound_states(g, v, 0, 3);
  CHECK(s.size() == 1);
  CHECK(s[0].eps < 0.0);
}

TEST_CASE("grid refinement changes hydrogenic eigenvalues below 1e-9") {
  double eps[2];
  for (int j = 0; j < 2; ++j) {
    const auto g = build_grid(2.0, j == 0 ? 600 : 1200);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      v[i] = -2.0 / g.r[i];
    eps[j] = solve_bound_states(g, v, 0, 1)[0].eps;
  }
  CHECK(std::abs(eps[0] - eps[1]) < 1e-9);
}

TEST_CASE("screened level entering the singlet jump (pinned oracle)") {
  const auto g = build_grid(2.0);
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.r[i];
    v[i] = -2.0 / r + 1.0 / r - std::exp(-4.0 * r) * (2.0 + 1.0 / r);
  }
  const auto s = solve_bound_states(g, v, 0, 1);
  REQUIRE(s.size() == 1);
  CHECK(s[0].eps == Approx(oracles::eps0_down_z2).margin(2e-8));
}

TEST_CASE("multipole integrals") {
  const auto g = build_grid(1.0);

  SECTION("k = 0 on a shell density equals its hartree potential") {
    const auto u = oracles::u_1s(g, 1.0);
    std::vector<double> n(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      n[i] = u[i] * u[i];
    const auto y0 = multipole_yk(g, u, u, 0);
    const auto vh = hartree_potential(g, n);
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(y0[i] == Approx(vh[i]).margin(1e-14));
  }

  SECTION("zero factor gives zero") {
    const auto u = oracles::u_1s(g, 1.0);
    const auto y = multipole_yk(g, u, std::vector<double>(g.size(), 0.0), 2);
    for (double x : y)
      CHECK(x == 0.0);
  }

  SECTION("k = 2 against the direct two-dimensional quadrature") {
    const auto u = oracles::u_2p(g, 1.0);
    std::vector<double> f(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      f[i] = u[i] * u[i]; // 2p shell density pair
    const auto y2 = multipole_yk(g, f, f, 2);

    // brute-force double integral \iint f(r) f(r') r_<^2/r_>^3 dr dr'
    double direct2d = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double rs = std::min(g.r[i], g.r[j]);
        const double rl = std::max(g.r[i], g.r[j]);
        direct2d += g.w[i] * g.w[j] * f[i] * f[j] * (rs * rs) / (rl * rl * rl);
      }
    }
    double via_yk = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      via_yk += g.w[i] * f[i] * y2[i];
    CHECK(via_yk == Approx(direct2d).margin(1e-9));

    // pointwise: Y2 row against the direct kernel row
    for (std::size_t ip : {std::size_t{50}, std::size_t{200}, std::size_t{350},
                           std::size_t{470}, std::size_t{599}}) {
      double row = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double rs = std::min(g.r[ip], g.r[j]);
        const double rl = std::max(g.r[ip], g.r[j]);
        row += g.w[j] * f[j] * (rs * rs) / (rl * rl * rl);
      }
      CHECK(y2[ip] == Approx(row).margin(1e-9));
    }
  }

  SECTION("symmetry in the two factors is exact") {
    const auto a = oracles::u_1s(g, 1.0);
    const auto b = oracles::u_2s(g, 1.0);
    const auto y_ab = multipole_yk(g, a, b, 1);
    const auto y_ba = multipole_yk(g, b, a, 1);
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(y_ab[i] == y_ba[i]);
  }

  SECTION("argument validation") {
    const auto u = oracles::u_1s(g, 1.0);
    CHECK_THROWS_AS(multipole_yk(g, u, u, -1), std::invalid_argument);
    CHECK_THROWS_AS(multipole_yk(g, u, std::vector<double>(3, 1.0), 0),
                    std::invalid_argument);
  }
}
