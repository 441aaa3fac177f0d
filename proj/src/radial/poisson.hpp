#pragma once

#include "radial/grid.hpp"

#include <vector>

namespace lhfatom::radial {

//! Hartree potential of a spherical charge distribution. The input is the
//! radially reduced density n_rad(r) = 4*pi*r^2*n(r), so that
//!   v_H(r) = (1/r) \int_0^r n_rad dr' + \int_r^inf n_rad/r' dr'.
//! Entries more negative than -1e-12 throw std::domain_error.
std::vector<double> hartree_potential(const RadialGrid &g,
                                      const std::vector<double> &n_rad);

//! Screened Slater multipole function of order k:
//!   Y_k(r) = r^-(k+1) \int_0^r f g r'^k dr' + r^k \int_r^inf f g r'^-(k+1) dr'.
//! For k=0 and f=g=u this is the Hartree potential of the shell density u^2.
std::vector<double> multipole_yk(const RadialGrid &g,
                                 const std::vector<double> &f,
                                 const std::vector<double> &g2, int k);

} // namespace lhfatom::radial
