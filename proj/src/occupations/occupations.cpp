#include "occupations/occupations.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace lhfatom::occ {

double beta_from_alpha(int n_baseline, double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::domain_error("beta_from_alpha: alpha must lie in [0,1]");
  if (n_baseline < 0)
    throw std::invalid_argument("beta_from_alpha: negative particle count");
  if (n_baseline == 0)
    return 0.0;
  const double N = n_baseline;
  return alpha * N / ((1.0 - alpha) * (1.0 + N) + alpha * N);
}

int OccupationSpec::baseline() const {
  int n = 0;
  for (const auto &sh : closed_up)
    n += sh.multiplicity();
  for (const auto &sh : closed_down)
    n += sh.multiplicity();
  return n;
}

double OccupationSpec::beta() const { return beta_from_alpha(baseline(), alpha); }

double OccupationSpec::n_sigma(Spin s, double gamma) const {
  double n = 0.0;
  for (const auto &sh : closed(s))
    n += sh.multiplicity();
  if (s == homo.spin)
    n += gamma;
  return n;
}

bool OccupationSpec::fully_polarized() const {
  return closed(other(homo.spin)).empty();
}

void OccupationSpec::validate() const {
  if (Z <= 0.0)
    throw std::invalid_argument("occupation spec: Z must be positive");
  if (alpha < 0.0 || alpha > 1.0)
    throw std::domain_error("occupation spec: alpha must lie in [0,1]");
  if (alpha > 0.0 && alpha < 1.0 && homo.sh.l != 0)
    throw std::invalid_argument(
        "occupation spec: fractional HOMO must be an s subshell (spherical symmetry)");
  for (Spin s : {Spin::up, Spin::down}) {
    std::set<std::pair<int, int>> seen;
    for (const auto &sh : closed(s)) {
      if (!seen.insert({sh.n, sh.l}).second)
        throw std::invalid_argument("occupation spec: duplicate closed shell " +
                                    to_string(sh));
      if (s == homo.spin && sh == homo.sh)
        throw std::invalid_argument("occupation spec: HOMO also listed as closed");
    }
  }
}

double EnsembleDensityMatrix::trace(Spin s) const {
  double t = 0.0;
  for (const auto &e : entries)
    if (e.orb.spin == s)
      t += e.weight * e.orb.multiplicity();
  return t;
}

std::vector<const WeightedOrbital *> EnsembleDensityMatrix::channel(Spin s) const {
  std::vector<const WeightedOrbital *> out;
  for (const auto &e : entries)
    if (e.orb.spin == s)
      out.push_back(&e);
  return out;
}

namespace {
const SpinOrbital *find_orbital(const std::vector<SpinOrbital> &orbs,
                                const SpinShell &key) {
  for (const auto &o : orbs)
    if (o.sh == key.sh && o.spin == key.spin)
      return &o;
  return nullptr;
}
} // namespace

EnsembleDensityMatrix build_density_matrix(const std::vector<SpinOrbital> &orbitals,
                                           const OccupationSpec &spec,
                                           double gamma) {
  spec.validate();
  if (gamma < 0.0 || gamma > 1.0)
    throw std::domain_error("build_density_matrix: gamma must lie in [0,1]");

  EnsembleDensityMatrix dm;
  for (Spin s : {Spin::up, Spin::down}) {
    for (const auto &sh : spec.closed(s)) {
      const auto *o = find_orbital(orbitals, {sh, s});
      if (!o)
        throw std::invalid_argument("build_density_matrix: no orbital for shell " +
                                    to_string(SpinShell{sh, s}));
      dm.entries.push_back({*o, 1.0});
    }
  }
  if (gamma > 0.0) {
    const auto *o = find_orbital(orbitals, spec.homo);
    if (!o)
      throw std::invalid_argument("build_density_matrix: no orbital for HOMO " +
                                  to_string(spec.homo));
    dm.entries.push_back({*o, gamma});
  }
  return dm;
}

std::vector<double> spin_density(const radial::RadialGrid &g,
                                 const EnsembleDensityMatrix &dm, Spin s) {
  std::vector<double> n(g.size(), 0.0);
  for (const auto &e : dm.entries) {
    if (e.orb.spin != s)
      continue;
    radial::require_on_grid(g, e.orb.u);
    const double f = e.weight * e.orb.multiplicity();
    for (std::size_t i = 0; i < g.size(); ++i)
      n[i] += f * e.orb.u[i] * e.orb.u[i];
  }
  return n;
}

std::vector<double> kernel_occupations(const radial::RadialGrid &g,
                                       const EnsembleDensityMatrix &dm, Spin s) {
  auto ch = dm.channel(s);
  std::vector<double> occs;
  std::set<int> ls;
  for (const auto *e : ch)
    ls.insert(e->orb.sh.l);
  for (int l : ls) {
    std::vector<const WeightedOrbital *> blk;
    for (const auto *e : ch)
      if (e->orb.sh.l == l)
        blk.push_back(e);
    const int m = static_cast<int>(blk.size());
    // eigenvalues of W^(1/2) S W^(1/2), S the orbital overlap matrix
    Eigen::MatrixXd A(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        A(a, b) = std::sqrt(blk[a]->weight * blk[b]->weight) *
                  radial::integrate_product(g, blk[a]->orb.u, blk[b]->orb.u);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    for (int i = 0; i < m; ++i)
      occs.push_back(es.eigenvalues()[i]);
  }
  std::sort(occs.begin(), occs.end(), std::greater<>());
  return occs;
}

} // namespace lhfatom::occ
