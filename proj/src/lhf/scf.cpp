#include "lhf/scf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace lhfatom::lhf {

using radial::RadialGrid;

std::vector<double> PotentialSet::v_eff(Spin s) const {
  const auto &vx_s = vx(s);
  std::vector<double> v(v_ext.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = v_ext[i] + v_hartree[i] + vx_s[i];
  return v;
}

const SpinOrbital *ScfResult::find(const SpinShell &s) const {
  for (const auto &o : orbitals)
    if (o.sh == s.sh && o.spin == s.spin)
      return &o;
  return nullptr;
}

namespace {

std::vector<double> external_potential(const RadialGrid &g, double Z) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    v[i] = -Z / g.r[i];
  return v;
}

std::vector<SpinShell> needed_shells(const OccupationSpec &spec) {
  std::vector<SpinShell> shells;
  for (Spin s : {Spin::up, Spin::down})
    for (const auto &sh : spec.closed(s))
      shells.push_back({sh, s});
  shells.push_back(spec.homo);
  return shells;
}

//! Solve all scheme shells of one spin in the given effective potential.
//! Throws UnboundError when a requested level is missing.
std::vector<SpinOrbital> solve_channel(const RadialGrid &g,
                                       const std::vector<double> &veff, Spin s,
                                       const std::vector<SpinShell> &shells) {
  std::vector<SpinOrbital> out;
  std::map<int, int> max_nodes;
  for (const auto &sh : shells)
    if (sh.spin == s)
      max_nodes[sh.sh.l] =
          std::max(max_nodes[sh.sh.l], sh.sh.n - sh.sh.l - 1);
  for (const auto &[l, nmax] : max_nodes) {
    const auto states = radial::solve_bound_states(g, veff, l, nmax + 1);
    for (const auto &sh : shells) {
      if (sh.spin != s || sh.sh.l != l)
        continue;
      const int nodes = sh.sh.n - sh.sh.l - 1;
      if (nodes >= static_cast<int>(states.size()))
        throw UnboundError("level " + occ::to_string(sh) +
                           " is not bound in the current potential");
      SpinOrbital o;
      o.sh = sh.sh;
      o.spin = s;
      o.eps = states[nodes].eps;
      o.u = states[nodes].u;
      out.push_back(std::move(o));
    }
  }
  return out;
}

double channel_peak(const std::vector<double> &n) {
  double p = 0.0;
  for (double x : n)
    p = std::max(p, x);
  return p;
}

//! Weight of the slowest-decaying (highest) occupied orbital of a channel;
//! fixes the analytic tail slope of vx per the asymptotic law.
double top_weight(const Channel &ch) {
  double w = 0.0, best = -1.0e300;
  for (const auto &e : ch) {
    if (e.orb->eps > best) {
      best = e.orb->eps;
      w = e.weight;
    }
  }
  return w;
}

//! Pointwise solve of the exchange equation for one channel (constant not
//! yet fixed); beyond the density floor the analytic a/r + c tail is glued.
std::vector<double> raw_update(const RadialGrid &g, const Channel &ch,
                               const std::vector<double> &vx_old,
                               double density_floor, double *slope_out) {
  const auto n = channel_density(g, ch);
  const auto S = exchange_slater(g, ch);
  const auto P = exchange_pot_term(g, ch, vx_old);
  const auto T = exchange_triple(g, ch);

  const double floor = density_floor * channel_peak(n);
  std::size_t cut = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (n[i] >= floor)
      cut = i;

  std::vector<double> v(g.size());
  for (std::size_t i = 0; i <= cut; ++i)
    v[i] = (P[i] - S[i] + T[i]) / n[i];
  const double a = -top_weight(ch);
  const double c = v[cut] - a / g.r[cut];
  for (std::size_t i = cut + 1; i < g.size(); ++i)
    v[i] = a / g.r[i] + c;
  if (slope_out)
    *slope_out = a;
  return v;
}

struct ConstantFix {
  double c_up{0.0}, c_down{0.0};
};

std::vector<double> shifted(const std::vector<double> &v, double c) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] + c;
  return out;
}

std::vector<double> vsum(const std::vector<double> &a,
                         const std::vector<double> &b, double sb) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + sb * b[i];
  return out;
}

} // namespace

double total_energy_direct(const OccupationSpec &spec,
                           const std::vector<SpinOrbital> &orbitals) {
  double e = 0.0;
  auto eps_of = [&](const SpinShell &key) {
    for (const auto &o : orbitals)
      if (o.sh == key.sh && o.spin == key.spin)
        return o.eps;
    throw std::invalid_argument("total_energy_direct: missing orbital " +
                                occ::to_string(key));
  };
  for (Spin s : {Spin::up, Spin::down})
    for (const auto &sh : spec.closed(s))
      e += sh.multiplicity() * eps_of({sh, s});
  if (spec.alpha > 0.0)
    e += spec.alpha * eps_of(spec.homo);
  return e;
}

DftEnergy total_energy_dft(const RadialGrid &g, const OccupationSpec &spec,
                           const std::vector<SpinOrbital> &orbitals,
                           const PotentialSet &pots) {
  const auto dm_a = occ::build_density_matrix(orbitals, spec, spec.alpha);
  const auto ch_up = channel_view(dm_a, Spin::up);
  const auto ch_dn = channel_view(dm_a, Spin::down);
  const auto n_up = channel_density(g, ch_up);
  const auto n_dn = channel_density(g, ch_dn);
  std::vector<double> n_tot(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    n_tot[i] = n_up[i] + n_dn[i];
  const auto vh_a = radial::hartree_potential(g, n_tot);

  // vx^(alpha) = vx + v_H^(eq) - v_H^(alpha)
  const auto vxa_up = vsum(vsum(pots.vx_up, pots.v_hartree, 1.0), vh_a, -1.0);
  const auto vxa_dn = vsum(vsum(pots.vx_down, pots.v_hartree, 1.0), vh_a, -1.0);

  const double e_x =
      -0.5 * (pair_repulsion(g, ch_up, ch_up) + pair_repulsion(g, ch_dn, ch_dn));
  double ivn = 0.0;
  if (!ch_up.empty())
    ivn += radial::integrate_product(g, vxa_up, n_up);
  if (!ch_dn.empty())
    ivn += radial::integrate_product(g, vxa_dn, n_dn);
  const double ivh = 0.5 * radial::integrate_product(g, vh_a, n_tot);

  DftEnergy de;
  de.e_x = e_x;
  de.residual = e_x - ivn - ivh;
  de.e_dft = total_energy_direct(spec, orbitals) - ivn - ivh + e_x;
  return de;
}

std::vector<double> lhf_residual(const RadialGrid &g,
                                 const EnsembleDensityMatrix &dm_eq,
                                 const std::vector<double> &vx_up,
                                 const std::vector<double> &vx_down, Spin s) {
  const double G = compute_G(g, vx_up, vx_down, dm_eq);
  const auto ch = channel_view(dm_eq, s);
  const auto &vx = (s == Spin::up) ? vx_up : vx_down;
  const auto n = channel_density(g, ch);
  const auto S = exchange_slater(g, ch);
  const auto P = exchange_pot_term(g, ch, vx);
  const auto T = exchange_triple(g, ch);
  std::vector<double> res(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    res[i] = (vx[i] + G) * n[i] - (P[i] - S[i] + T[i]);
  return res;
}

namespace {

//! Sub-one-particle branch: the one-state condition gives v_tilde = 0
//! exactly, so v_eff = v_ext for every alpha in [0,1].
ScfResult scf_sub_one(const OccupationSpec &spec, const RadialGrid &g) {
  ScfResult res;
  res.spec = spec;
  res.grid = &g;
  res.pots.v_ext = external_potential(g, spec.Z);

  const auto homo = spec.homo;
  const auto states = radial::solve_bound_states(
      g, res.pots.v_ext, homo.sh.l, homo.sh.n - homo.sh.l);
  const int nodes = homo.sh.n - homo.sh.l - 1;
  if (nodes >= static_cast<int>(states.size()))
    throw UnboundError("level " + occ::to_string(homo) + " is not bound");
  SpinOrbital o;
  o.sh = homo.sh;
  o.spin = homo.spin;
  o.eps = states[nodes].eps;
  o.u = states[nodes].u;
  res.orbitals.push_back(o);

  // Equation ensemble carries the pure (N+1)-state: weight 1 on the HOMO.
  res.dm_eq = occ::build_density_matrix(res.orbitals, spec, 1.0);
  const auto n_eq = occ::spin_density(g, res.dm_eq, homo.spin);
  res.pots.v_hartree = radial::hartree_potential(g, n_eq);
  res.pots.vx_up.assign(g.size(), 0.0);
  res.pots.vx_down.assign(g.size(), 0.0);
  auto &vx1 = homo.spin == Spin::up ? res.pots.vx_up : res.pots.vx_down;
  for (std::size_t i = 0; i < g.size(); ++i)
    vx1[i] = -res.pots.v_hartree[i];
  (homo.spin == Spin::up ? res.pots.tail_slope_up : res.pots.tail_slope_down) =
      -1.0;

  res.E_direct = spec.alpha * o.eps;
  const auto de = total_energy_dft(g, spec, res.orbitals, res.pots);
  res.E_dft = de.e_dft;
  res.E_x = de.e_x;
  res.identity_residual = de.residual;
  res.pots.G_beta =
      compute_G(g, res.pots.vx_up, res.pots.vx_down, res.dm_eq);
  if (spec.alpha > 0.0) {
    const auto dm_a = occ::build_density_matrix(res.orbitals, spec, spec.alpha);
    const auto n_a = occ::spin_density(g, dm_a, homo.spin);
    const auto vh_a = radial::hartree_potential(g, n_a);
    const auto vxa = vsum(vsum(vx1, res.pots.v_hartree, 1.0), vh_a, -1.0);
    res.pots.G_alpha = compute_G(g, homo.spin == Spin::up ? vxa : res.pots.vx_up,
                                 homo.spin == Spin::down ? vxa : res.pots.vx_down,
                                 dm_a);
  }
  res.iterations = 1;
  return res;
}

} // namespace

ScfResult scf(const OccupationSpec &spec, const RadialGrid &grid,
              const ScfParams &params) {
  spec.validate();
  radial::validate_grid(grid);
  if (params.mixing <= 0.0 || params.mixing > 1.0)
    throw std::invalid_argument("scf: mixing must lie in (0,1]");

  if (spec.baseline() == 0)
    return scf_sub_one(spec, grid);

  const auto &g = grid;
  const auto shells = needed_shells(spec);
  const Spin s1 = spec.homo.spin;
  const bool polarized = spec.fully_polarized();
  const bool integer_n = (spec.alpha == 0.0 || spec.alpha == 1.0);
  const double beta = spec.beta();
  const double gamma_eq = integer_n ? spec.alpha : beta;

  const auto v_ext = external_potential(g, spec.Z);

  // initial guess: bare-nucleus orbitals, Slater-like scaled exchange
  std::vector<double> v_h(g.size(), 0.0);
  std::array<std::vector<double>, 2> vx{std::vector<double>(g.size(), 0.0),
                                        std::vector<double>(g.size(), 0.0)};
  {
    std::vector<SpinOrbital> orbs;
    for (Spin s : {Spin::up, Spin::down}) {
      auto ch = solve_channel(g, v_ext, s, shells);
      orbs.insert(orbs.end(), ch.begin(), ch.end());
    }
    const auto dm0 = occ::build_density_matrix(orbs, spec, gamma_eq);
    const auto n_up = occ::spin_density(g, dm0, Spin::up);
    const auto n_dn = occ::spin_density(g, dm0, Spin::down);
    std::vector<double> n_tot = vsum(n_up, n_dn, 1.0);
    v_h = radial::hartree_potential(g, n_tot);
    const double scale = -1.0 / std::max(spec.n_total(gamma_eq), 1.0);
    vx[0] = vsum(std::vector<double>(g.size(), 0.0), v_h, scale);
    vx[1] = vx[0];
  }

  auto idx = [](Spin s) { return s == Spin::up ? 0 : 1; };

  ScfResult res;
  res.spec = spec;
  res.grid = &grid;
  res.pots.v_ext = v_ext;

  double e_prev = 0.0;
  std::ostringstream history;
  bool converged = false;

  std::vector<double> v_h_used;
  std::array<std::vector<double>, 2> vx_used;

  for (int it = 1; it <= params.max_iter; ++it) {
    // 1. orbitals in the current potentials
    std::vector<SpinOrbital> orbs;
    for (Spin s : {Spin::up, Spin::down}) {
      const auto veff = vsum(vsum(v_ext, v_h, 1.0), vx[idx(s)], 1.0);
      auto ch = solve_channel(g, veff, s, shells);
      orbs.insert(orbs.end(), ch.begin(), ch.end());
    }
    v_h_used = v_h;
    vx_used = vx;

    for (const auto &o : orbs)
      if (o.sh == spec.homo.sh && o.spin == spec.homo.spin && spec.alpha > 0.0 &&
          o.eps >= 0.0)
        throw UnboundError("unbound species: HOMO " + occ::to_string(spec.homo) +
                           " has eps >= 0");

    // 2. ensembles and Hartree potential at the equation weight
    const auto dm_eq = occ::build_density_matrix(orbs, spec, gamma_eq);
    const auto n_up = occ::spin_density(g, dm_eq, Spin::up);
    const auto n_dn = occ::spin_density(g, dm_eq, Spin::down);
    const auto n_tot = vsum(n_up, n_dn, 1.0);
    const auto v_h_new = radial::hartree_potential(g, n_tot);

    // 3. pointwise exchange update per occupied channel
    const auto ch_up = channel_view(dm_eq, Spin::up);
    const auto ch_dn = channel_view(dm_eq, Spin::down);
    std::array<std::vector<double>, 2> raw{std::vector<double>(g.size(), 0.0),
                                           std::vector<double>(g.size(), 0.0)};
    double slope_up = 0.0, slope_dn = 0.0;
    if (!ch_up.empty())
      raw[0] = raw_update(g, ch_up, vx[0], params.density_floor, &slope_up);
    if (!ch_dn.empty())
      raw[1] = raw_update(g, ch_dn, vx[1], params.density_floor, &slope_dn);

    // 4. additive constants
    ConstantFix fix;
    const auto dm_a = occ::build_density_matrix(orbs, spec, spec.alpha);
    auto G_of_alpha = [&](const std::array<std::vector<double>, 2> &v) {
      // gamma-consistent exchange potential: v + v_H^(eq) - v_H^(alpha)
      const auto na_up = occ::spin_density(g, dm_a, Spin::up);
      const auto na_dn = occ::spin_density(g, dm_a, Spin::down);
      const auto vh_a = radial::hartree_potential(g, vsum(na_up, na_dn, 1.0));
      const auto sh_up = vsum(vsum(v[0], v_h_new, 1.0), vh_a, -1.0);
      const auto sh_dn = vsum(vsum(v[1], v_h_new, 1.0), vh_a, -1.0);
      return compute_G(g, sh_up, sh_dn, dm_a);
    };
    const double n_a_s1 = spec.n_sigma(s1, spec.alpha);
    if (polarized) {
      const double G_a = G_of_alpha(raw);
      const double c = -G_a / n_a_s1;
      (s1 == Spin::up ? fix.c_up : fix.c_down) = c;
    } else if (!integer_n) {
      const double G_b = compute_G(g, raw[0], raw[1], dm_eq);
      const double G_a = G_of_alpha(raw);
      const double a11 = spec.n_sigma(Spin::up, beta);
      const double a12 = spec.n_sigma(Spin::down, beta);
      const double a21 = spec.n_sigma(Spin::up, spec.alpha);
      const double a22 = spec.n_sigma(Spin::down, spec.alpha);
      const double det = a11 * a22 - a12 * a21;
      fix.c_up = (-G_b * a22 + G_a * a12) / det;
      fix.c_down = (-G_a * a11 + G_b * a21) / det;
    } else {
      // integer particle number: G(gamma0) = 0 and dG/dgamma = 0 in the
      // HOMO direction -- the one-sided limit of the fractional conditions
      const double G_0 = compute_G(g, raw[0], raw[1], dm_eq);
      const SpinOrbital *homo_orb = nullptr;
      for (const auto &o : orbs)
        if (o.sh == spec.homo.sh && o.spin == spec.homo.spin)
          homo_orb = &o;
      const auto ch_s1 = (s1 == Spin::up) ? ch_up : ch_dn;
      const double D =
          gauge_derivative(g, raw[idx(s1)], ch_s1, homo_orb->u);
      const double a11 = spec.n_sigma(Spin::up, spec.alpha);
      const double a12 = spec.n_sigma(Spin::down, spec.alpha);
      const double a21 = (s1 == Spin::up) ? 1.0 : 0.0;
      const double a22 = (s1 == Spin::down) ? 1.0 : 0.0;
      const double det = a11 * a22 - a12 * a21;
      fix.c_up = (-G_0 * a22 + D * a12) / det;
      fix.c_down = (-D * a11 + G_0 * a21) / det;
    }
    std::array<std::vector<double>, 2> v_new = raw;
    if (!ch_up.empty())
      v_new[0] = shifted(raw[0], fix.c_up);
    if (!ch_dn.empty())
      v_new[1] = shifted(raw[1], fix.c_down);

    // 5. convergence measure on the full screened potential, density-weighted
    double delta = 0.0;
    for (Spin s : {Spin::up, Spin::down}) {
      const auto &n_s = (s == Spin::up) ? n_up : n_dn;
      const double peak = channel_peak(n_s);
      if (peak <= 0.0)
        continue;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const double dv = (v_h_new[i] + v_new[idx(s)][i]) - (v_h[i] + vx[idx(s)][i]);
        delta = std::max(delta, std::abs(dv) * (n_s[i] / peak));
      }
    }
    const double e_new = total_energy_direct(spec, orbs);
    const double d_e = std::abs(e_new - e_prev);
    e_prev = e_new;

    res.orbitals = orbs;
    res.dm_eq = dm_eq;
    res.pots.c_up = fix.c_up;
    res.pots.c_down = fix.c_down;
    res.pots.tail_slope_up = slope_up;
    res.pots.tail_slope_down = slope_dn;
    res.iterations = it;
    res.final_delta = delta;
    res.final_denergy = d_e;

    history << "  it " << it << ": dv=" << delta << " dE=" << d_e << "\n";

    if (it > 1 && delta < params.tol && d_e < params.tol_energy) {
      converged = true;
      break;
    }

    // 6. linear mixing
    const double m = params.mixing;
    for (std::size_t i = 0; i < g.size(); ++i)
      v_h[i] += m * (v_h_new[i] - v_h[i]);
    for (Spin s : {Spin::up, Spin::down}) {
      auto &v = vx[idx(s)];
      const auto &vn = v_new[idx(s)];
      for (std::size_t i = 0; i < g.size(); ++i)
        v[i] += m * (vn[i] - v[i]);
    }
  }

  if (!converged)
    throw ScfError("scf did not converge after " +
                   std::to_string(params.max_iter) + " iterations; history:\n" +
                   history.str());

  res.pots.v_hartree = v_h_used;
  res.pots.vx_up = vx_used[0];
  res.pots.vx_down = vx_used[1];

  res.E_direct = total_energy_direct(spec, res.orbitals);
  const auto de = total_energy_dft(g, spec, res.orbitals, res.pots);
  res.E_dft = de.e_dft;
  res.E_x = de.e_x;
  res.identity_residual = de.residual;
  res.pots.G_beta = compute_G(g, res.pots.vx_up, res.pots.vx_down, res.dm_eq);
  {
    const auto dm_a = occ::build_density_matrix(res.orbitals, spec, spec.alpha);
    const auto na_up = occ::spin_density(g, dm_a, Spin::up);
    const auto na_dn = occ::spin_density(g, dm_a, Spin::down);
    const auto vh_a = radial::hartree_potential(g, vsum(na_up, na_dn, 1.0));
    const auto sh_up = vsum(vsum(res.pots.vx_up, v_h_used, 1.0), vh_a, -1.0);
    const auto sh_dn = vsum(vsum(res.pots.vx_down, v_h_used, 1.0), vh_a, -1.0);
    res.pots.G_alpha = compute_G(g, sh_up, sh_dn, dm_a);
  }
  return res;
}

std::optional<double> shell_eigenvalue(const ScfResult &res, const SpinShell &s) {
  if (const auto *o = res.find(s))
    return o->eps;
  const auto &g = *res.grid;
  const auto veff = res.pots.v_eff(s.spin);
  const int nodes = s.sh.n - s.sh.l - 1;
  const auto states = radial::solve_bound_states(g, veff, s.sh.l, nodes + 1);
  if (nodes >= static_cast<int>(states.size()))
    return std::nullopt;
  return states[nodes].eps;
}

} // namespace lhfatom::lhf
