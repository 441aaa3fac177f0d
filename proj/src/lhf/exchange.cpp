#include "lhf/exchange.hpp"

#include "lhf/angular.hpp"

#include <cmath>

namespace lhfatom::lhf {

Channel channel_view(const EnsembleDensityMatrix &dm, Spin s) {
  Channel ch;
  for (const auto &e : dm.entries)
    if (e.orb.spin == s)
      ch.push_back({&e.orb, e.weight});
  return ch;
}

std::vector<double> channel_density(const RadialGrid &g, const Channel &ch) {
  std::vector<double> n(g.size(), 0.0);
  for (const auto &a : ch) {
    const double f = a.weight * a.orb->multiplicity();
    for (std::size_t i = 0; i < g.size(); ++i)
      n[i] += f * a.orb->u[i] * a.orb->u[i];
  }
  return n;
}

namespace {
std::vector<double> pair_prod(const std::vector<double> &a,
                              const std::vector<double> &b) {
  std::vector<double> p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    p[i] = a[i] * b[i];
  return p;
}
} // namespace

std::vector<double> exchange_slater(const RadialGrid &g, const Channel &ch) {
  std::vector<double> s(g.size(), 0.0);
  for (const auto &a : ch) {
    for (const auto &b : ch) {
      const double wf = a.weight * b.weight * a.orb->multiplicity() *
                        b.orb->multiplicity();
      const int la = a.orb->sh.l, lb = b.orb->sh.l;
      for (int k = std::abs(la - lb); k <= la + lb; k += 2) {
        const double ck = threej000_sq(la, lb, k);
        if (ck == 0.0)
          continue;
        const auto yk = radial::multipole_yk(g, a.orb->u, b.orb->u, k);
        for (std::size_t i = 0; i < g.size(); ++i)
          s[i] += wf * ck * a.orb->u[i] * b.orb->u[i] * yk[i];
      }
    }
  }
  return s;
}

std::vector<double> exchange_pot_term(const RadialGrid &g, const Channel &ch,
                                      const std::vector<double> &vx) {
  radial::require_on_grid(g, vx);
  std::vector<double> p(g.size(), 0.0);
  for (const auto &a : ch) {
    for (const auto &b : ch) {
      if (a.orb->sh.l != b.orb->sh.l)
        continue;
      const double wf = a.weight * b.weight * a.orb->multiplicity();
      double me = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i)
        me += g.w[i] * vx[i] * a.orb->u[i] * b.orb->u[i];
      for (std::size_t i = 0; i < g.size(); ++i)
        p[i] += wf * me * a.orb->u[i] * b.orb->u[i];
    }
  }
  return p;
}

std::vector<double> exchange_triple(const RadialGrid &g, const Channel &ch) {
  std::vector<double> t(g.size(), 0.0);
  for (const auto &a : ch) {
    for (const auto &c : ch) {
      if (a.orb->sh.l != c.orb->sh.l)
        continue;
      const double wac = a.weight * c.weight * a.orb->multiplicity();
      for (const auto &b : ch) {
        const int la = a.orb->sh.l, lb = b.orb->sh.l;
        const double wb = b.weight * b.orb->multiplicity();
        for (int k = std::abs(la - lb); k <= la + lb; k += 2) {
          const double ck = threej000_sq(la, lb, k);
          if (ck == 0.0)
            continue;
          const auto yk = radial::multipole_yk(g, b.orb->u, c.orb->u, k);
          double rk = 0.0; // R^k(ab|bc)
          for (std::size_t i = 0; i < g.size(); ++i)
            rk += g.w[i] * a.orb->u[i] * b.orb->u[i] * yk[i];
          const double f = wac * wb * ck * rk;
          for (std::size_t i = 0; i < g.size(); ++i)
            t[i] += f * a.orb->u[i] * c.orb->u[i];
        }
      }
    }
  }
  return t;
}

double pair_repulsion(const RadialGrid &g, const Channel &a, const Channel &b) {
  double x = 0.0;
  for (const auto &sa : a) {
    for (const auto &sb : b) {
      const double wf = sa.weight * sb.weight * sa.orb->multiplicity() *
                        sb.orb->multiplicity();
      const int la = sa.orb->sh.l, lb = sb.orb->sh.l;
      for (int k = std::abs(la - lb); k <= la + lb; k += 2) {
        const double ck = threej000_sq(la, lb, k);
        if (ck == 0.0)
          continue;
        const auto yk = radial::multipole_yk(g, sa.orb->u, sb.orb->u, k);
        const auto uu = pair_prod(sa.orb->u, sb.orb->u);
        x += wf * ck * radial::integrate_product(g, uu, yk);
      }
    }
  }
  return x;
}

double compute_G(const RadialGrid &g, const std::vector<double> &vx_up,
                 const std::vector<double> &vx_down,
                 const EnsembleDensityMatrix &dm) {
  const auto ch_up = channel_view(dm, Spin::up);
  const auto ch_dn = channel_view(dm, Spin::down);
  const auto n_up = channel_density(g, ch_up);
  const auto n_dn = channel_density(g, ch_dn);
  std::vector<double> n_tot(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    n_tot[i] = n_up[i] + n_dn[i];
  const auto vh = radial::hartree_potential(g, n_tot);

  double G = 0.0;
  if (!ch_up.empty())
    G += radial::integrate_product(g, vx_up, n_up);
  if (!ch_dn.empty())
    G += radial::integrate_product(g, vx_down, n_dn);
  G += 0.5 * radial::integrate_product(g, vh, n_tot);
  G += 0.5 * (pair_repulsion(g, ch_up, ch_up) + pair_repulsion(g, ch_dn, ch_dn));
  return G;
}

double gauge_derivative(const RadialGrid &g, const std::vector<double> &vx_s1,
                        const Channel &ch_s1,
                        const std::vector<double> &u_homo) {
  double d = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    d += g.w[i] * vx_s1[i] * u_homo[i] * u_homo[i];
  for (const auto &a : ch_s1) {
    const int la = a.orb->sh.l;
    const auto yk = radial::multipole_yk(g, a.orb->u, u_homo, la);
    const auto uu = pair_prod(a.orb->u, u_homo);
    d += a.weight * radial::integrate_product(g, uu, yk);
  }
  return d;
}

} // namespace lhfatom::lhf
