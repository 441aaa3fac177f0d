#include "analytic/analytic.hpp"

#include "radial/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace lhfatom::analytic {

namespace {

std::vector<double> square(const std::vector<double> &u) {
  std::vector<double> s(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    s[i] = u[i] * u[i];
  return s;
}

radial::BoundState ground_state(const RadialGrid &g,
                                const std::vector<double> &v) {
  auto states = radial::solve_bound_states(g, v, 0, 1);
  if (states.empty())
    throw std::runtime_error("analytic: potential holds no bound s state");
  return states.front();
}

double pair_energy(const RadialGrid &g, const std::vector<double> &fa,
                   const std::vector<double> &fb) {
  // \iint fa(r) fb(r') / |r-r'| for s-type radial densities
  return radial::integrate_product(g, fa, radial::hartree_potential(g, fb));
}

} // namespace

SubOneResult sub_one_particle(const RadialGrid &g,
                              const std::vector<double> &v_ext, double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::domain_error("sub_one_particle: alpha must lie in [0,1]");
  SubOneResult res;
  const auto gs = ground_state(g, v_ext);
  res.eps0 = gs.eps;
  res.u0 = gs.u;
  res.energy = alpha * gs.eps;
  res.v_hartree = radial::hartree_potential(g, square(gs.u));
  res.v_x.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    res.v_x[i] = -res.v_hartree[i];
  return res;
}

SingletPotentials singlet_closed_form(const RadialGrid &g,
                                      const std::vector<double> &u_up,
                                      const std::vector<double> &u_down,
                                      double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::domain_error("singlet_closed_form: alpha must lie in [0,1]");
  SingletPotentials p;
  p.beta = alpha / (2.0 - alpha);
  const auto y_up = radial::hartree_potential(g, square(u_up));
  const auto y_dn = radial::hartree_potential(g, square(u_down));
  p.c_up = -p.beta * radial::integrate_product(g, square(u_up), y_dn);
  p.vx_up.resize(g.size());
  p.vx_down.resize(g.size());
  p.vt_up.resize(g.size());
  p.vt_down.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    p.vx_up[i] = -y_up[i] + p.c_up;
    p.vx_down[i] = -p.beta * y_dn[i];
    p.vt_up[i] = p.beta * y_dn[i] + p.c_up;
    p.vt_down[i] = y_up[i];
  }
  return p;
}

SingletResult singlet_scf(const RadialGrid &g, const std::vector<double> &v_ext,
                          double alpha, double mixing, double tol,
                          int max_iter) {
  // start from the bare orbital in v_ext for both spins
  auto u0 = ground_state(g, v_ext).u;
  std::vector<double> vt_up(g.size(), 0.0), vt_dn(g.size(), 0.0);
  SingletResult res;
  res.u_up = u0;
  res.u_down = u0;
  for (int it = 1; it <= max_iter; ++it) {
    const auto p = singlet_closed_form(g, res.u_up, res.u_down, alpha);
    double delta = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      delta = std::max(delta, std::abs(p.vt_up[i] - vt_up[i]));
      delta = std::max(delta, std::abs(p.vt_down[i] - vt_dn[i]));
      vt_up[i] += mixing * (p.vt_up[i] - vt_up[i]);
      vt_dn[i] += mixing * (p.vt_down[i] - vt_dn[i]);
    }
    std::vector<double> veff_up(g.size()), veff_dn(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      veff_up[i] = v_ext[i] + vt_up[i];
      veff_dn[i] = v_ext[i] + vt_dn[i];
    }
    const auto su = ground_state(g, veff_up);
    const auto sd = ground_state(g, veff_dn);
    res.u_up = su.u;
    res.u_down = sd.u;
    res.eps_up = su.eps;
    res.eps_down = sd.eps;
    res.iterations = it;
    if (delta < tol)
      break;
    if (it == max_iter)
      throw std::runtime_error("singlet_scf: not converged");
  }
  res.pots = singlet_closed_form(g, res.u_up, res.u_down, alpha);
  res.energy = res.eps_up + alpha * res.eps_down;
  return res;
}

OepSingletResult oep_singlet_scf(const RadialGrid &g,
                                 const std::vector<double> &v_ext, double alpha,
                                 double mixing, double tol, int max_iter) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::domain_error("oep_singlet_scf: alpha must lie in [0,1]");
  auto u0 = ground_state(g, v_ext).u;
  OepSingletResult res;
  res.u_up = u0;
  res.u_down = u0;
  std::vector<double> vt_up(g.size(), 0.0), vt_dn(g.size(), 0.0);
  for (int it = 1; it <= max_iter; ++it) {
    const auto y_up = radial::hartree_potential(g, square(res.u_up));
    const auto y_dn = radial::hartree_potential(g, square(res.u_down));
    double delta = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double tu = alpha * y_dn[i];
      const double td = y_up[i];
      delta = std::max({delta, std::abs(tu - vt_up[i]), std::abs(td - vt_dn[i])});
      vt_up[i] += mixing * (tu - vt_up[i]);
      vt_dn[i] += mixing * (td - vt_dn[i]);
    }
    std::vector<double> veff_up(g.size()), veff_dn(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      veff_up[i] = v_ext[i] + vt_up[i];
      veff_dn[i] = v_ext[i] + vt_dn[i];
    }
    const auto su = ground_state(g, veff_up);
    const auto sd = ground_state(g, veff_dn);
    res.u_up = su.u;
    res.u_down = sd.u;
    res.eps_up = su.eps;
    res.eps_down = sd.eps;
    res.iterations = it;
    if (delta < tol)
      break;
    if (it == max_iter)
      throw std::runtime_error("oep_singlet_scf: not converged");
  }
  res.vt_up = vt_up;
  res.vt_down = vt_dn;
  res.energy = res.eps_up + alpha * res.eps_down -
               alpha * pair_energy(g, square(res.u_up), square(res.u_down));
  return res;
}

SingletJump singlet_jump(const RadialGrid &g, const std::vector<double> &v_ext) {
  SingletJump sj;
  const auto gs = ground_state(g, v_ext);
  sj.eps0_up = gs.eps;
  const auto vh = radial::hartree_potential(g, square(gs.u));
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    v[i] = v_ext[i] + vh[i];
  const auto screened = radial::solve_bound_states(g, v, 0, 1);
  if (screened.empty())
    throw std::runtime_error("singlet_jump: screened level is unbound");
  sj.eps0_down = screened.front().eps;
  sj.jump = sj.eps0_down - sj.eps0_up;
  return sj;
}

TripletJump triplet_jump(const RadialGrid &g, const std::vector<double> &v_ext) {
  const auto states = radial::solve_bound_states(g, v_ext, 0, 2);
  if (states.size() < 2)
    throw std::runtime_error("triplet_jump: need two bound s states");
  TripletJump tj;
  tj.eps0 = states[0].eps;
  tj.eps1 = states[1].eps;
  const auto &u0 = states[0].u;
  const auto &u1 = states[1].u;
  std::vector<double> u01(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    u01[i] = u0[i] * u1[i];
  const auto y11 = radial::multipole_yk(g, u1, u1, 0);
  const auto y01 = radial::multipole_yk(g, u0, u1, 0);
  tj.hartree_01 = radial::integrate_product(g, square(u0), y11);
  tj.exchange_01 = radial::integrate_product(g, u01, y01);
  tj.jump = tj.eps1 - tj.eps0 - (tj.exchange_01 - tj.hartree_01);
  return tj;
}

} // namespace lhfatom::analytic
