#pragma once

#include "occupations/shells.hpp"
#include "radial/grid.hpp"

#include <vector>

namespace lhfatom::occ {

//! Renormalized HOMO fraction entering the effective-potential equations,
//!   beta = alpha*N / ((1-alpha)*(1+N) + alpha*N),
//! with N the integer baseline count. For N = 0 this returns 0 and the
//! solver must take the pure sub-one-particle branch instead.
double beta_from_alpha(int n_baseline, double alpha);

//! Shell configuration of an atom/ion with a fractionally occupied HOMO.
//! closed_* lists the fully occupied subshells per spin excluding the HOMO
//! shell; the HOMO carries the fraction alpha in [0,1].
struct OccupationSpec {
  double Z{0.0};
  std::vector<Subshell> closed_up;
  std::vector<Subshell> closed_down;
  SpinShell homo;
  double alpha{1.0};

  //! Integer baseline N (electrons in closed shells).
  int baseline() const;
  //! Eq.-13 renormalized fraction for this spec.
  double beta() const;
  //! Electrons of spin s when the HOMO carries weight gamma.
  double n_sigma(Spin s, double gamma) const;
  double n_total(double gamma) const { return n_sigma(Spin::up, gamma) + n_sigma(Spin::down, gamma); }
  //! True when only the HOMO spin channel holds any particles.
  bool fully_polarized() const;
  const std::vector<Subshell> &closed(Spin s) const {
    return s == Spin::up ? closed_up : closed_down;
  }

  //! Validates field consistency (alpha range, HOMO not doubly listed,
  //! fractional HOMO restricted to s subshells). Throws std::invalid_argument.
  void validate() const;
};

//! Low-rank spin-resolved one-particle ensemble density matrix: a list of
//! orbitals with weights, weight 1 on closed shells and gamma on the HOMO.
struct WeightedOrbital {
  SpinOrbital orb;
  double weight{1.0};
};

struct EnsembleDensityMatrix {
  std::vector<WeightedOrbital> entries;

  double trace(Spin s) const; //!< sum of weight * multiplicity
  std::vector<const WeightedOrbital *> channel(Spin s) const;
};

//! Assembles the ensemble density matrix at HOMO weight gamma from solved
//! orbitals. Every closed shell (and, for gamma > 0, the HOMO) must have a
//! matching orbital; otherwise throws std::invalid_argument.
EnsembleDensityMatrix build_density_matrix(const std::vector<SpinOrbital> &orbitals,
                                           const OccupationSpec &spec,
                                           double gamma);

//! Radially reduced spin density n_rad(r) = 4 pi r^2 n_sigma(r)
//!                                        = sum_shells w * (2l+1) * u^2.
std::vector<double> spin_density(const radial::RadialGrid &g,
                                 const EnsembleDensityMatrix &dm, Spin s);

//! Eigen-occupations of the density-matrix kernel in one spin channel,
//! computed from the orbital overlap matrix. For exactly orthonormal
//! orbitals these are the weights themselves; quadrature-level deviations
//! measure how well the low-rank representation is idempotent at
//! integer particle number.
std::vector<double> kernel_occupations(const radial::RadialGrid &g,
                                       const EnsembleDensityMatrix &dm, Spin s);

} // namespace lhfatom::occ
