#pragma once

#include "lhf/exchange.hpp"
#include "occupations/occupations.hpp"
#include "radial/eigensolver.hpp"
#include "radial/grid.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace lhfatom::lhf {

using occ::OccupationSpec;
using occ::SpinOrbital;
using occ::SpinShell;

enum class GaugeSide { below, above };

struct ScfParams {
  double mixing = 0.3;
  int max_iter = 300;
  double tol = 1.0e-8;        //!< density-weighted max-norm of the potential update
  double tol_energy = 1.0e-8; //!< Ha
  //! Relative channel density below which the exchange potential is
  //! continued with its analytic tail form a/r + c (the update divides
  //! by the channel density, which underflows in the far tail).
  double density_floor = 1.0e-12;
};

struct PotentialSet {
  std::vector<double> v_ext;
  std::vector<double> v_hartree; //!< built from the equation-ensemble density
  std::vector<double> vx_up;
  std::vector<double> vx_down;
  double c_up{0.0}, c_down{0.0}; //!< constants fixed on the last update
  double G_alpha{0.0}, G_beta{0.0};
  double tail_slope_up{0.0}, tail_slope_down{0.0};

  std::vector<double> v_eff(Spin s) const;
  const std::vector<double> &vx(Spin s) const {
    return s == Spin::up ? vx_up : vx_down;
  }
};

struct ScfResult {
  OccupationSpec spec;
  const radial::RadialGrid *grid{nullptr};
  PotentialSet pots;
  std::vector<SpinOrbital> orbitals; //!< closed shells + HOMO shell
  EnsembleDensityMatrix dm_eq;       //!< HOMO at the equation weight
  double E_direct{0.0};
  double E_dft{0.0};
  double E_x{0.0};
  double identity_residual{0.0};
  int iterations{0};
  double final_delta{0.0};
  double final_denergy{0.0};

  const SpinOrbital *find(const SpinShell &s) const;
};

class ScfError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class UnboundError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Self-consistent solution of the fractional-occupation exchange equations:
//! fixed point of {solve bound states in v_ext + v_H + v_x} -> {rebuild the
//! ensemble} -> {pointwise exchange update + constant fixing}, with linear
//! mixing. At integer particle number the one-sided gauge is encoded in the
//! spec representation itself (alpha = 1 on the last filled shell for the
//! below limit, alpha = 0 on the next shell for the above limit).
//! Throws UnboundError when a required level is not bound (or the HOMO ends
//! at eps >= 0), ScfError on non-convergence.
ScfResult scf(const OccupationSpec &spec, const radial::RadialGrid &grid,
              const ScfParams &params = {});

//! Occupation-weighted eigenvalue sum, physical fraction on the HOMO.
double total_energy_direct(const OccupationSpec &spec,
                           const std::vector<SpinOrbital> &orbitals);

struct DftEnergy {
  double e_dft;
  double e_x;
  double residual; //!< the combination that must vanish at the solution
};

//! Density-functional form of the total energy, evaluated with all
//! ensemble weights at the physical fraction alpha. The exchange potential
//! entering here is vx^(alpha) = vx + v_H^(eq) - v_H^(alpha).
DftEnergy total_energy_dft(const radial::RadialGrid &g,
                           const OccupationSpec &spec,
                           const std::vector<SpinOrbital> &orbitals,
                           const PotentialSet &pots);

//! Residual of the spin-sigma self-consistency equation
//!   [vx(r) + G_beta] n(r) - (exchange kernels)(r)
//! for a given potential set and equation-gauge ensemble.
std::vector<double> lhf_residual(const radial::RadialGrid &g,
                                 const EnsembleDensityMatrix &dm_eq,
                                 const std::vector<double> &vx_up,
                                 const std::vector<double> &vx_down, Spin s);

//! Eigenvalue of an arbitrary shell in the converged effective potential
//! (used for empty-orbital curves). Returns nullopt when not bound.
std::optional<double> shell_eigenvalue(const ScfResult &res, const SpinShell &s);

} // namespace lhfatom::lhf
