#include "lhf/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace lhfatom::lhf {

AsymptoticFit asymptotic_fit(const radial::RadialGrid &g,
                             const std::vector<double> &v, double r_lo,
                             double r_hi) {
  radial::require_on_grid(g, v);
  if (!(r_lo < r_hi) || r_lo < g.r.front() || r_hi > g.r.back())
    throw std::invalid_argument("asymptotic_fit: window outside grid");

  // least squares on v_i = a * x_i + c with x = 1/r
  double sx = 0, sxx = 0, sy = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.r[i] < r_lo || g.r[i] > r_hi)
      continue;
    const double x = 1.0 / g.r[i];
    sx += x;
    sxx += x * x;
    sy += v[i];
    sxy += x * v[i];
    ++m;
  }
  if (m < 4)
    throw std::invalid_argument("asymptotic_fit: window holds fewer than 4 points");
  const double det = m * sxx - sx * sx;
  AsymptoticFit fit;
  fit.slope = (m * sxy - sx * sy) / det;
  fit.constant = (sy * sxx - sx * sxy) / det;
  return fit;
}

JumpReport potential_jump(const ScfResult &below, const ScfResult &above,
                          double density_floor) {
  const auto &g = *below.grid;
  if (above.grid->size() != g.size() || above.grid->r != g.r)
    throw std::invalid_argument("potential_jump: runs live on different grids");

  JumpReport rep;
  const auto n = g.size();
  rep.dv_up.resize(n);
  rep.dv_down.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rep.dv_up[i] = above.pots.vx_up[i] - below.pots.vx_up[i];
    rep.dv_down[i] = above.pots.vx_down[i] - below.pots.vx_down[i];
  }

  rep.n_up = std::round(0.5 * (below.spec.n_sigma(Spin::up, below.spec.alpha) +
                               above.spec.n_sigma(Spin::up, above.spec.alpha)));
  rep.n_down =
      std::round(0.5 * (below.spec.n_sigma(Spin::down, below.spec.alpha) +
                        above.spec.n_sigma(Spin::down, above.spec.alpha)));

  // bulk region: both spin densities above the floor in both runs
  const auto nb_up = occ::spin_density(g, below.dm_eq, Spin::up);
  const auto nb_dn = occ::spin_density(g, below.dm_eq, Spin::down);
  const auto na_up = occ::spin_density(g, above.dm_eq, Spin::up);
  const auto na_dn = occ::spin_density(g, above.dm_eq, Spin::down);
  auto peak = [](const std::vector<double> &f) {
    double p = 0.0;
    for (double x : f)
      p = std::max(p, x);
    return p;
  };
  const double fb_up = density_floor * peak(nb_up);
  const double fb_dn = density_floor * peak(nb_dn);
  const double fa_up = density_floor * peak(na_up);
  const double fa_dn = density_floor * peak(na_dn);
  rep.bulk.assign(n, 0);
  int m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool up_ok = nb_up[i] >= fb_up && na_up[i] >= fa_up;
    const bool dn_ok = nb_dn[i] >= fb_dn && na_dn[i] >= fa_dn;
    if (up_ok && dn_ok) {
      rep.bulk[i] = 1;
      rep.mean_up += rep.dv_up[i];
      rep.mean_down += rep.dv_down[i];
      ++m;
    }
  }
  if (m > 0) {
    rep.mean_up /= m;
    rep.mean_down /= m;
    for (std::size_t i = 0; i < n; ++i) {
      if (!rep.bulk[i])
        continue;
      if (rep.mean_up != 0.0)
        rep.reldev_up = std::max(
            rep.reldev_up, std::abs(rep.dv_up[i] - rep.mean_up) / std::abs(rep.mean_up));
      if (rep.mean_down != 0.0)
        rep.reldev_down =
            std::max(rep.reldev_down,
                     std::abs(rep.dv_down[i] - rep.mean_down) / std::abs(rep.mean_down));
    }
  }
  rep.relation_residual = rep.mean_up * rep.n_up + rep.mean_down * rep.n_down;
  const double scale = std::max(std::abs(rep.mean_up * rep.n_up),
                                std::abs(rep.mean_down * rep.n_down));
  rep.relation_residual_rel =
      scale > 0.0 ? std::abs(rep.relation_residual) / scale : 0.0;
  return rep;
}

} // namespace lhfatom::lhf
