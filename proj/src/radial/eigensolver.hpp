#pragma once

#include "radial/grid.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lhfatom::radial {

//! One bound state of the radial equation
//!   -u''/2 + [l(l+1)/(2r^2) + v(r)] u = eps u,  u(0)=u(inf)=0,
//! normalized to \int u^2 dr = 1, with u > 0 near the origin.
struct BoundState {
  double eps{0.0};
  std::vector<double> u;
  int nodes{0};
};

struct ShootingOptions {
  int max_bisect = 260;
  //! Solve on the half-resolution mesh too and Richardson-extrapolate eps.
  bool richardson = true;
};

class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Lowest n_states eigenpairs at angular momentum l in the sampled potential v.
//! Returns fewer states when the potential supports fewer bound states (the
//! k-th state carries k-1 radial nodes); throws SolverError with bracket
//! diagnostics when the shooting iteration fails to close.
std::vector<BoundState> solve_bound_states(const RadialGrid &g,
                                           const std::vector<double> &v, int l,
                                           int n_states,
                                           const ShootingOptions &opt = {});

} // namespace lhfatom::radial
