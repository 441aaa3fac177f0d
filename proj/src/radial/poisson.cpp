#include "radial/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace lhfatom::radial {

std::vector<double> hartree_potential(const RadialGrid &g,
                                      const std::vector<double> &n_rad) {
  validate_grid(g);
  require_on_grid(g, n_rad);
  for (double v : n_rad) {
    if (v < -1.0e-12)
      throw std::domain_error("hartree_potential: negative density");
  }

  const auto n = g.size();
  // inner(r) = \int_0^r n_rad dr'; the piece below r_min is negligible
  // (densities vanish like r^2 there).
  std::vector<double> inner(n), outer(n);
  inner[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    inner[i] = inner[i - 1] + 0.5 * g.dx *
                                  (n_rad[i - 1] * g.r[i - 1] + n_rad[i] * g.r[i]);
  }
  // outer(r) = \int_r^inf n_rad/r' dr' = \int_x n_rad dx in the log variable
  outer[n - 1] = 0.0;
  for (std::size_t i = n - 1; i-- > 0;) {
    outer[i] = outer[i + 1] + 0.5 * g.dx * (n_rad[i] + n_rad[i + 1]);
  }

  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = inner[i] / g.r[i] + outer[i];
  return v;
}

std::vector<double> multipole_yk(const RadialGrid &g,
                                 const std::vector<double> &f,
                                 const std::vector<double> &g2, int k) {
  validate_grid(g);
  require_on_grid(g, f);
  require_on_grid(g, g2);
  if (k < 0)
    throw std::invalid_argument("multipole_yk: k must be non-negative");

  const auto n = g.size();
  // A(r) = \int_0^r f g r'^k dr', B(r) = \int_r^inf f g r'^-(k+1) dr'.
  // Trapezoid in x with integrands f g r^(k+1) and f g r^-k.
  std::vector<double> A(n), B(n);
  auto ia = [&](std::size_t i) { return f[i] * g2[i] * std::pow(g.r[i], k + 1); };
  auto ib = [&](std::size_t i) { return f[i] * g2[i] * std::pow(g.r[i], -k); };
  A[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    A[i] = A[i - 1] + 0.5 * g.dx * (ia(i - 1) + ia(i));
  B[n - 1] = 0.0;
  for (std::size_t i = n - 1; i-- > 0;)
    B[i] = B[i + 1] + 0.5 * g.dx * (ib(i) + ib(i + 1));

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i)
    y[i] = A[i] * std::pow(g.r[i], -(k + 1)) + B[i] * std::pow(g.r[i], k);
  return y;
}

} // namespace lhfatom::radial
