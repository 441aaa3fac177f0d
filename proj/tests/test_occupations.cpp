#include "occupations/occupations.hpp"
#include "radial/eigensolver.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace lhfatom;
using namespace lhfatom::occ;
using Catch::Approx;

namespace {

//! Hydrogenic orbital set for a given Z on a grid (1s/2s both spins).
std::vector<SpinOrbital> hydrogenic_orbitals(const radial::RadialGrid &g,
                                             double Z) {
  std::vector<SpinOrbital> out;
  for (Spin s : {Spin::up, Spin::down}) {
    out.push_back({{1, 0}, s, -0.5 * Z * Z, oracles::u_1s(g, Z)});
    out.push_back({{2, 0}, s, -0.125 * Z * Z, oracles::u_2s(g, Z)});
  }
  return out;
}

double idem_deviation(const std::vector<double> &occs) {
  double d = 0.0;
  for (double l : occs)
    d += (l * l - l) * (l * l - l);
  return std::sqrt(d);
}

} // namespace

TEST_CASE("subshell and spin parsing") {
  CHECK(parse_subshell("1s") == Subshell{1, 0});
  CHECK(parse_subshell("2p") == Subshell{2, 1});
  CHECK(parse_subshell("3d") == Subshell{3, 2});
  CHECK_THROWS_AS(parse_subshell("s1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subshell("1x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subshell("1p"), std::invalid_argument);
  CHECK(parse_spin("up") == Spin::up);
  CHECK(parse_spin("down") == Spin::down);
  CHECK(to_string(SpinShell{{2, 0}, Spin::down}) == "2s_down");

  // aufbau order: 1s_u < 1s_d < 2s_u < 2s_d < 2p_u < 2p_d < 3s_u
  const SpinShell a{{1, 0}, Spin::up}, b{{1, 0}, Spin::down};
  const SpinShell c{{2, 1}, Spin::up}, d{{3, 0}, Spin::up};
  CHECK(aufbau_less(a, b));
  CHECK(aufbau_less(b, c));
  CHECK(aufbau_less(c, d));
}

TEST_CASE("renormalized fraction beta(alpha, N)") {
  CHECK(beta_from_alpha(1, 0.5) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(beta_from_alpha(2, 0.5) == Approx(0.4).epsilon(1e-15));
  for (int n : {0, 1, 2, 3, 4}) {
    CHECK(beta_from_alpha(n, 0.0) == 0.0);
    CHECK(beta_from_alpha(n, 1.0) == Approx(n == 0 ? 0.0 : 1.0));
  }
  CHECK_THROWS_AS(beta_from_alpha(1, -0.1), std::domain_error);
  CHECK_THROWS_AS(beta_from_alpha(1, 1.1), std::domain_error);

  SECTION("monotone in alpha and below the diagonal") {
    for (int n : {1, 2, 3, 4}) {
      double prev = 0.0;
      for (int i = 1; i <= 40; ++i) {
        const double a = i / 40.0;
        const double b = beta_from_alpha(n, a);
        CHECK(b > prev);
        if (i < 40)
          CHECK(b < a); // strictly below the diagonal away from endpoints
        prev = b;
      }
    }
  }

  SECTION("two-particle case matches alpha/(2-alpha)") {
    for (double a : {0.1, 0.3, 0.7, 0.95})
      CHECK(beta_from_alpha(1, a) == Approx(a / (2.0 - a)).epsilon(1e-15));
  }
}

TEST_CASE("occupation spec bookkeeping") {
  OccupationSpec be;
  be.Z = 4.0;
  be.closed_up = {{1, 0}};
  be.closed_down = {{1, 0}};
  be.homo = {{2, 0}, Spin::up};
  be.alpha = 0.9;
  be.validate();
  CHECK(be.baseline() == 2);
  CHECK(be.beta() == Approx(0.9 * 2 / (0.1 * 3 + 1.8)).epsilon(1e-15));
  CHECK(be.n_sigma(Spin::up, be.alpha) == Approx(1.9));
  CHECK(be.n_sigma(Spin::down, be.alpha) == Approx(1.0));
  CHECK(!be.fully_polarized());

  OccupationSpec bad = be;
  bad.homo = {{2, 1}, Spin::up};
  bad.alpha = 0.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument); // fractional p

  bad = be;
  bad.closed_up.push_back(bad.homo.sh);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument); // HOMO listed closed

  bad = be;
  bad.alpha = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("ensemble density matrix construction") {
  const auto g = radial::build_grid(2.0);
  const auto orbs = hydrogenic_orbitals(g, 2.0);

  SECTION("integer two-particle case is idempotent per spin") {
    OccupationSpec he;
    he.Z = 2.0;
    he.closed_up = {{1, 0}};
    he.homo = {{1, 0}, Spin::down};
    he.alpha = 1.0;
    const auto dm = build_density_matrix(orbs, he, 1.0);
    CHECK(dm.trace(Spin::up) == Approx(1.0));
    CHECK(dm.trace(Spin::down) == Approx(1.0));
    for (Spin s : {Spin::up, Spin::down}) {
      const auto occs = kernel_occupations(g, dm, s);
      REQUIRE(occs.size() == 1);
      CHECK(occs[0] == Approx(1.0).margin(1e-10));
      CHECK(idem_deviation(occs) < 1e-9);
    }
  }

  SECTION("triplet ensemble kernel carries occupations {1, gamma}") {
    OccupationSpec tri;
    tri.Z = 2.0;
    tri.closed_up = {{1, 0}};
    tri.homo = {{2, 0}, Spin::up};
    tri.alpha = 0.37;
    const auto dm = build_density_matrix(orbs, tri, 0.37);
    const auto occs = kernel_occupations(g, dm, Spin::up);
    REQUIRE(occs.size() == 2);
    CHECK(occs[0] == Approx(1.0).margin(1e-8));
    CHECK(occs[1] == Approx(0.37).margin(1e-8));
    CHECK(idem_deviation(occs) > 0.1); // fractional case breaks idempotency
  }

  SECTION("trace at the renormalized weight") {
    OccupationSpec be;
    be.Z = 4.0;
    be.closed_up = {{1, 0}};
    be.closed_down = {{1, 0}};
    be.homo = {{2, 0}, Spin::up};
    be.alpha = 0.9;
    const auto orbs4 = hydrogenic_orbitals(g, 4.0);
    const auto dm = build_density_matrix(orbs4, be, be.beta());
    CHECK(dm.trace(Spin::up) == Approx(1.0 + be.beta()).epsilon(1e-14));
    CHECK(dm.trace(Spin::down) == Approx(1.0).epsilon(1e-14));
  }

  SECTION("missing orbital is a consistency error") {
    OccupationSpec ne;
    ne.Z = 10.0;
    ne.closed_up = {{1, 0}, {2, 1}};
    ne.homo = {{2, 0}, Spin::up};
    ne.alpha = 1.0;
    CHECK_THROWS_AS(build_density_matrix(orbs, ne, 1.0),
                    std::invalid_argument); // no 2p orbital supplied
  }
}

TEST_CASE("spin densities") {
  const auto g = radial::build_grid(2.0);
  const auto orbs = hydrogenic_orbitals(g, 2.0);

  OccupationSpec tri;
  tri.Z = 2.0;
  tri.closed_up = {{1, 0}};
  tri.homo = {{2, 0}, Spin::up};
  tri.alpha = 0.6;

  SECTION("single weight-1 shell reduces to u^2") {
    OccupationSpec one;
    one.Z = 2.0;
    one.homo = {{1, 0}, Spin::up};
    one.alpha = 1.0;
    const auto dm = build_density_matrix(orbs, one, 1.0);
    const auto n = spin_density(g, dm, Spin::up);
    const auto u = oracles::u_1s(g, 2.0);
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(n[i] == Approx(u[i] * u[i]).margin(1e-14));
  }

  SECTION("density integrates to the channel trace") {
    const double gamma = tri.beta();
    const auto dm = build_density_matrix(orbs, tri, gamma);
    const auto n_up = spin_density(g, dm, Spin::up);
    CHECK(radial::integrate(g, n_up) ==
          Approx(tri.n_sigma(Spin::up, gamma)).margin(1e-10));
    const auto n_dn = spin_density(g, dm, Spin::down);
    CHECK(radial::integrate(g, n_dn) == Approx(0.0).margin(1e-14));
  }

  SECTION("weights converge to the integer limits continuously") {
    const auto dm_lo = build_density_matrix(orbs, tri, 1e-9);
    const auto dm_int = build_density_matrix(orbs, tri, 0.0);
    const auto n_lo = spin_density(g, dm_lo, Spin::up);
    const auto n_int = spin_density(g, dm_int, Spin::up);
    for (std::size_t i = 0; i < g.size(); i += 37)
      CHECK(n_lo[i] == Approx(n_int[i]).margin(1e-8));
  }
}
