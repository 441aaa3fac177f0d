#pragma once

#include "occupations/occupations.hpp"
#include "radial/grid.hpp"
#include "radial/poisson.hpp"

#include <vector>

namespace lhfatom::lhf {

using occ::EnsembleDensityMatrix;
using occ::Spin;
using radial::RadialGrid;

//! One spin channel of an ensemble density matrix.
struct ChannelShell {
  const occ::SpinOrbital *orb;
  double weight;
};
using Channel = std::vector<ChannelShell>;

Channel channel_view(const EnsembleDensityMatrix &dm, Spin s);

//! n~(r) = sum_a w_a (2l_a+1) u_a^2 — the radially reduced channel density.
std::vector<double> channel_density(const RadialGrid &g, const Channel &ch);

//! Slater-type exchange kernel, 4 pi r^2 \int |rho(x,x')|^2/|r-r'| dx':
//!   S~(r) = sum_ab w_a w_b M_a M_b u_a u_b sum_k C_k(l_a,l_b) Y_k[u_a u_b](r).
std::vector<double> exchange_slater(const RadialGrid &g, const Channel &ch);

//! 4 pi r^2 \int v_x(x') |rho(x,x')|^2 dx' for a spherical v_x:
//!   P~(r) = sum_{ab, l_a=l_b} w_a w_b M_a u_a u_b <v_x u_a u_b>.
std::vector<double> exchange_pot_term(const RadialGrid &g, const Channel &ch,
                                      const std::vector<double> &vx);

//! 4 pi r^2 triple-product integral
//!   \int rho(x,x') rho(x',x'') rho(x'',x)/|r'-r''| dx' dx''.
std::vector<double> exchange_triple(const RadialGrid &g, const Channel &ch);

//! \iint rho_A(x,x') rho_B(x,x') / |r-r'| dx dx' for two channels of equal
//! spin. With A = B this is the self-exchange integral entering G and E_x.
double pair_repulsion(const RadialGrid &g, const Channel &a, const Channel &b);

//! The gamma-dependent constant of the ensemble equations:
//!   G = sum_s \int v_xs n_s + 1/2 \int v_H n + 1/2 sum_s \iint |rho_s|^2 K,
//! evaluated on the density matrix dm (weights at some gamma) with the
//! matching v_x^(gamma) potentials; v_H is rebuilt from dm's total density.
//! Shifting v_xs by a constant c adds exactly c * N_s^(gamma).
double compute_G(const RadialGrid &g, const std::vector<double> &vx_up,
                 const std::vector<double> &vx_down,
                 const EnsembleDensityMatrix &dm);

//! Derivative dG/dgamma at fixed orbitals, taken in the HOMO direction:
//!   D = \int v_x,s1 u_h^2 dr + \iint rho_s1 (u_h u_h) K.
//! Together with G itself this pins the additive constants at integer
//! particle number (the one-sided gauge limit).
double gauge_derivative(const RadialGrid &g, const std::vector<double> &vx_s1,
                        const Channel &ch_s1, const std::vector<double> &u_homo);

} // namespace lhfatom::lhf
