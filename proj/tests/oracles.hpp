#pragma once

// Closed-form hydrogenic reference data shared by the test suites.

#include "radial/grid.hpp"

#include <cmath>
#include <vector>

namespace oracles {

inline std::vector<double> u_1s(const lhfatom::radial::RadialGrid &g, double Z) {
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    u[i] = 2.0 * std::pow(Z, 1.5) * g.r[i] * std::exp(-Z * g.r[i]);
  return u;
}

inline std::vector<double> u_2s(const lhfatom::radial::RadialGrid &g, double Z) {
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    u[i] = std::pow(Z, 1.5) / std::sqrt(2.0) * (1.0 - 0.5 * Z * g.r[i]) *
           g.r[i] * std::exp(-0.5 * Z * g.r[i]);
  return u;
}

inline std::vector<double> u_2p(const lhfatom::radial::RadialGrid &g, double Z) {
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    u[i] = std::pow(Z, 1.5) / (2.0 * std::sqrt(6.0)) * Z * g.r[i] * g.r[i] *
           std::exp(-0.5 * Z * g.r[i]);
  return u;
}

//! Hartree potential of the hydrogenic 1s density, closed form.
inline double v_hartree_1s(double Z, double r) {
  return 1.0 / r - std::exp(-2.0 * Z * r) * (Z + 1.0 / r);
}

//! Coulomb and exchange integrals of the hydrogenic (1s,2s) pair.
inline double j_1s2s(double Z) { return 17.0 * Z / 81.0; }
inline double k_1s2s(double Z) { return 16.0 * Z / 729.0; }

//! Ground state of -u''/2 + [-2/r + vH_1s(Z=2)]u = eps u: the screened level
//! entering the singlet derivative jump at N=1 for Z=2. Recorded once at
//! high resolution and cross-checked with an independent variational solve.
inline constexpr double eps0_down_z2 = -0.8207003630706;

} // namespace oracles
