#pragma once

#include "radial/eigensolver.hpp"
#include "radial/grid.hpp"

#include <vector>

namespace lhfatom::analytic {

using radial::RadialGrid;

//! Fewer than one particle: the one-state condition collapses to
//! v_tilde = 0, so v_eff = v_ext exactly and E = alpha * eps0.
struct SubOneResult {
  double eps0;
  double energy;
  std::vector<double> u0;
  std::vector<double> v_hartree; //!< of the occupied state's density
  std::vector<double> v_x;       //!< = -v_hartree
};
SubOneResult sub_one_particle(const RadialGrid &g,
                              const std::vector<double> &v_ext, double alpha);

//! Closed-form singlet potentials for 1 < N < 2 at HOMO fraction alpha:
//! spin-up fully occupied (u_up), spin-down fractional (u_down).
struct SingletPotentials {
  double beta;  //!< alpha/(2-alpha)
  double c_up;  //!< -beta \iint u_up^2 u_down^2 / |r-r'|
  std::vector<double> vx_up;   //!< -Y0[u_up^2] + c_up
  std::vector<double> vx_down; //!< -beta Y0[u_down^2]
  std::vector<double> vt_up;   //!< screened potential beta Y0[u_down^2] + c_up
  std::vector<double> vt_down; //!< Y0[u_up^2]
};
SingletPotentials singlet_closed_form(const RadialGrid &g,
                                      const std::vector<double> &u_up,
                                      const std::vector<double> &u_down,
                                      double alpha);

//! Self-consistent singlet solution driven by the closed-form potentials.
struct SingletResult {
  double eps_up, eps_down;
  double energy; //!< eps_up + alpha*eps_down
  SingletPotentials pots;
  std::vector<double> u_up, u_down;
  int iterations;
};
SingletResult singlet_scf(const RadialGrid &g, const std::vector<double> &v_ext,
                          double alpha, double mixing = 0.5, double tol = 1e-10,
                          int max_iter = 400);

//! Optimized-effective-potential counterpart of the singlet: the screened
//! potentials carry the physical alpha and vanish at infinity;
//! E = eps_up + alpha*eps_down - alpha J(u_up, u_down).
struct OepSingletResult {
  double eps_up, eps_down;
  double energy;
  std::vector<double> vt_up, vt_down;
  std::vector<double> u_up, u_down;
  int iterations;
};
OepSingletResult oep_singlet_scf(const RadialGrid &g,
                                 const std::vector<double> &v_ext, double alpha,
                                 double mixing = 0.5, double tol = 1e-10,
                                 int max_iter = 400);

//! Derivative jump of E(N) at N=1 for the singlet filling:
//! dE' = eps0_down - eps0_up, with eps0_up the ground state of v_ext and
//! eps0_down the ground state of v_ext screened by the first orbital.
struct SingletJump {
  double eps0_up;
  double eps0_down;
  double jump;
};
SingletJump singlet_jump(const RadialGrid &g, const std::vector<double> &v_ext);

//! Derivative jump at N=1 for the fully polarized (triplet) filling:
//! dE' = eps1 - eps0 + J01 - K01 with the two lowest s states of v_ext.
struct TripletJump {
  double eps0, eps1;
  double hartree_01;  //!< J01 = \iint u0^2(r) u1^2(r')/|r-r'|
  double exchange_01; //!< K01 = \iint u0 u1(r) u0 u1(r')/|r-r'|
  double jump;
};
TripletJump triplet_jump(const RadialGrid &g, const std::vector<double> &v_ext);

} // namespace lhfatom::analytic
