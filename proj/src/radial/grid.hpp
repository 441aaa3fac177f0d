#pragma once

#include <cstddef>
#include <vector>

namespace lhfatom::radial {

//! Logarithmic radial mesh r_i = r_min*exp(i*dx), with trapezoidal
//! quadrature weights in the log variable: \int f dr ~ sum_i w_i f_i.
//! All radial functions in the solver live on one of these meshes.
struct RadialGrid {
  double r_min{0.0};
  double r_max{0.0};
  double dx{0.0}; //!< uniform spacing in x = ln(r)
  std::vector<double> r;
  std::vector<double> w;

  std::size_t size() const { return r.size(); }
};

//! Default mesh for nuclear charge Z: r_min = 1e-6/Z, log-spaced up to r_max.
//! Resolves the nuclear cusp and the -1/r tails for Z <= 12.
//! Throws std::invalid_argument for Z <= 0, n_points < 200 or r_max <= 10.
RadialGrid build_grid(double Z, std::size_t n_points = 600, double r_max = 40.0);

//! Checks mesh invariants (positive, strictly increasing, matching weights).
//! Throws std::invalid_argument on violation.
void validate_grid(const RadialGrid &g);

//! Checks that f is one finite value per mesh point.
void require_on_grid(const RadialGrid &g, const std::vector<double> &f);

//! \int f dr over the mesh.
double integrate(const RadialGrid &g, const std::vector<double> &f);

//! \int f g dr over the mesh.
double integrate_product(const RadialGrid &g, const std::vector<double> &f,
                         const std::vector<double> &g2);

} // namespace lhfatom::radial
