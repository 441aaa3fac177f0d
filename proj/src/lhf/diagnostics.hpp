#pragma once

#include "lhf/scf.hpp"

#include <vector>

namespace lhfatom::lhf {

struct AsymptoticFit {
  double slope;    //!< a in v ~ a/r + c; tends to -beta (fractional spin) / -1
  double constant; //!< c
};

//! Least-squares fit of v ~ a/r + c over the tail window [r_lo, r_hi]
//! (default window is [0.5, 0.9] * r_max). Throws std::invalid_argument
//! when the window lies outside the grid or holds fewer than 4 points.
AsymptoticFit asymptotic_fit(const radial::RadialGrid &g,
                             const std::vector<double> &v, double r_lo,
                             double r_hi);

inline AsymptoticFit asymptotic_fit(const radial::RadialGrid &g,
                                    const std::vector<double> &v) {
  return asymptotic_fit(g, v, 0.5 * g.r_max, 0.9 * g.r_max);
}

//! Pointwise difference of converged exchange potentials across an integer
//! particle number, with constancy diagnostics over the region where both
//! spin densities are non-vanishing.
struct JumpReport {
  std::vector<double> dv_up, dv_down;
  std::vector<unsigned char> bulk; //!< both spin densities above the floor
  double mean_up{0.0}, mean_down{0.0};
  double reldev_up{0.0}, reldev_down{0.0}; //!< max |dv-mean|/|mean| over bulk
  double n_up{0.0}, n_down{0.0};           //!< integer channel counts
  double relation_residual{0.0};           //!< mean_up*N_up + mean_down*N_down
  double relation_residual_rel{0.0};
};

//! below/above are converged runs at N-delta and N+delta on the same grid;
//! the density floor is relative to each channel peak.
JumpReport potential_jump(const ScfResult &below, const ScfResult &above,
                          double density_floor = 1.0e-6);

} // namespace lhfatom::lhf
