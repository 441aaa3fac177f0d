#include "radial/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lhfatom::radial {

RadialGrid build_grid(double Z, std::size_t n_points, double r_max) {
  if (Z <= 0.0)
    throw std::invalid_argument("build_grid: Z must be positive");
  if (n_points < 200)
    throw std::invalid_argument("build_grid: need at least 200 points, got " +
                                std::to_string(n_points));
  if (r_max <= 10.0)
    throw std::invalid_argument("build_grid: r_max must exceed 10 bohr");

  RadialGrid g;
  g.r_min = 1.0e-6 / Z;
  g.r_max = r_max;
  const double x0 = std::log(g.r_min);
  const double x1 = std::log(g.r_max);
  g.dx = (x1 - x0) / static_cast<double>(n_points - 1);
  g.r.resize(n_points);
  g.w.resize(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    g.r[i] = std::exp(x0 + g.dx * static_cast<double>(i));
    g.w[i] = g.dx * g.r[i];
  }
  g.r.front() = g.r_min;
  g.r.back() = g.r_max;
  g.w.front() *= 0.5;
  g.w.back() *= 0.5;
  return g;
}

void validate_grid(const RadialGrid &g) {
  const auto n = g.size();
  if (n < 2 || g.w.size() != n)
    throw std::invalid_argument("radial grid: inconsistent sizes");
  if (!(g.r.front() > 0.0))
    throw std::invalid_argument("radial grid: points must be positive");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(g.r[i] > g.r[i - 1]))
      throw std::invalid_argument("radial grid: points must increase");
  }
}

void require_on_grid(const RadialGrid &g, const std::vector<double> &f) {
  if (f.size() != g.size())
    throw std::invalid_argument("radial function does not match grid size");
  for (double v : f) {
    if (!std::isfinite(v))
      throw std::invalid_argument("radial function has non-finite entries");
  }
}

double integrate(const RadialGrid &g, const std::vector<double> &f) {
  validate_grid(g);
  require_on_grid(g, f);
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    s += g.w[i] * f[i];
  return s;
}

double integrate_product(const RadialGrid &g, const std::vector<double> &f,
                         const std::vector<double> &g2) {
  validate_grid(g);
  require_on_grid(g, f);
  require_on_grid(g, g2);
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    s += g.w[i] * f[i] * g2[i];
  return s;
}

} // namespace lhfatom::radial
