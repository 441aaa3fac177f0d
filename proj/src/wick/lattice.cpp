#include "wick/lattice.hpp"

#include "wick/fock.hpp"
#include "wick/rdm.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lhfatom::wick {

void LatticeModel::validate() const {
  const int m = sites();
  if (h0.cols() != m || K.rows() != m || K.cols() != m)
    throw std::invalid_argument("lattice model: shape mismatch");
  if ((h0 - h0.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
      (K - K.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("lattice model: h0 and K must be symmetric");
  for (int i = 0; i < m; ++i)
    if (K(i, i) != 0.0)
      throw std::invalid_argument("lattice model: K must have zero diagonal");
}

namespace {

Eigen::MatrixXd effective_orbitals(const LatticeModel &model,
                                   const Eigen::VectorXd &v_tilde) {
  Eigen::MatrixXd h = model.h0;
  h.diagonal() += v_tilde;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  return es.eigenvectors();
}

DeterminantState make_state(const Eigen::MatrixXd &orbs, int n) {
  DeterminantState st;
  st.m = static_cast<int>(orbs.rows());
  st.occ = (n > 0) ? ((1u << n) - 1u) : 0u;
  st.orbitals = orbs.cast<Cplx>();
  return st;
}

// <Phi| rho(x) (V - U) |Phi> per site: V and U are diagonal in the
// occupation basis, so the expectation is a weighted sum over masks.
Eigen::VectorXd sitewise_vu(const LatticeModel &model,
                            const Eigen::VectorXd &v_tilde,
                            const DeterminantState &st) {
  const int m = st.m;
  const StateVec psi = st.assemble();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
  for (int mask = 0; mask < (1 << m); ++mask) {
    const double w = std::norm(psi[mask]);
    if (w == 0.0)
      continue;
    double v = 0.0, u = 0.0;
    for (int s = 0; s < m; ++s) {
      if (!(mask & (1 << s)))
        continue;
      v += v_tilde[s];
      for (int t = s + 1; t < m; ++t)
        if (mask & (1 << t))
          u += model.K(s, t);
    }
    for (int s = 0; s < m; ++s)
      if (mask & (1 << s))
        out[s] += w * (v - u);
  }
  return out;
}

double scalar_vu(const LatticeModel &model, const Eigen::VectorXd &v_tilde,
                 const DeterminantState &st) {
  const StateVec psi = st.assemble();
  double g = 0.0;
  for (int mask = 0; mask < (1 << st.m); ++mask) {
    const double w = std::norm(psi[mask]);
    if (w == 0.0)
      continue;
    double v = 0.0, u = 0.0;
    for (int s = 0; s < st.m; ++s) {
      if (!(mask & (1 << s)))
        continue;
      v += v_tilde[s];
      for (int t = s + 1; t < st.m; ++t)
        if (mask & (1 << t))
          u += model.K(s, t);
    }
    g += w * (v - u);
  }
  return g;
}

} // namespace

DiscreteLhfEval evaluate_lhf_condition(const LatticeModel &model,
                                       const Eigen::VectorXd &v_tilde, int n,
                                       double alpha) {
  model.validate();
  const int m = model.sites();
  if (n < 1 || n + 1 > m)
    throw std::invalid_argument("evaluate_lhf_condition: need 1 <= n < sites");
  const auto orbs = effective_orbitals(model, v_tilde);
  const auto lower = make_state(orbs, n);
  const auto upper = make_state(orbs, n + 1);

  DiscreteLhfEval ev;
  ev.lhs_bruteforce = (1.0 - alpha) / n * sitewise_vu(model, v_tilde, lower) +
                      alpha / (n + 1) * sitewise_vu(model, v_tilde, upper);

  // Wick route: ensemble rho_1 from the orbitals, rho_2/rho_3 by Wick
  // factorization, combined into the pointwise kernel identity and mapped
  // back to the Eq.-(10) normalization.
  const double beta =
      alpha * n / ((1.0 - alpha) * (1.0 + n) + alpha * n);
  Eigen::MatrixXcd rho1 = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 0; i < n; ++i)
    rho1 += orbs.col(i).cast<Cplx>() * orbs.col(i).transpose().cast<Cplx>();
  rho1 += beta * orbs.col(n).cast<Cplx>() * orbs.col(n).transpose().cast<Cplx>();

  const auto rho2 = wick_factorization(rho1, 2);
  const auto rho3 = wick_factorization(rho1, 3);
  auto idx2 = [m](int a, int b) { return a * m + b; };
  auto idx3 = [m](int a, int b, int c) { return (a * m + b) * m + c; };

  Eigen::VectorXd F = Eigen::VectorXd::Zero(m);
  for (int x = 0; x < m; ++x) {
    double f = -v_tilde[x] * rho1(x, x).real();
    for (int x1 = 0; x1 < m; ++x1) {
      const double r2 = rho2(idx2(x, x1), idx2(x, x1)).real();
      f += r2 * model.K(x, x1);
      f -= r2 * v_tilde[x1];
      for (int x2 = 0; x2 < m; ++x2)
        f += 0.5 * rho3(idx3(x, x1, x2), idx3(x, x1, x2)).real() *
             model.K(x1, x2);
    }
    F[x] = f;
  }
  const double D = (1.0 - alpha) * (1.0 + n) + alpha * n;
  ev.lhs_wick = -D / (static_cast<double>(n) * (n + 1)) * F;

  ev.max_residual = ev.lhs_bruteforce.cwiseAbs().maxCoeff();
  ev.max_route_gap = (ev.lhs_bruteforce - ev.lhs_wick).cwiseAbs().maxCoeff();
  return ev;
}

DiscreteGs bruteforce_g(const LatticeModel &model,
                        const Eigen::VectorXd &v_tilde, int n) {
  model.validate();
  const auto orbs = effective_orbitals(model, v_tilde);
  DiscreteGs gs;
  gs.g_lower = scalar_vu(model, v_tilde, make_state(orbs, n));
  gs.g_upper = scalar_vu(model, v_tilde, make_state(orbs, n + 1));
  return gs;
}

DiscreteSolveResult solve_discrete_lhf(const LatticeModel &model, int n,
                                       double alpha, double mixing,
                                       int max_iter, double tol) {
  model.validate();
  const int m = model.sites();
  if (n < 1 || n + 1 > m)
    throw std::invalid_argument("solve_discrete_lhf: need 1 <= n < sites");
  const double beta = alpha * n / ((1.0 - alpha) * (1.0 + n) + alpha * n);

  Eigen::VectorXd vt = Eigen::VectorXd::Zero(m);
  int it = 1;
  for (; it <= max_iter; ++it) {
    const auto orbs = effective_orbitals(model, vt);
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < n; ++i)
      rho += orbs.col(i) * orbs.col(i).transpose();
    rho += beta * orbs.col(n) * orbs.col(n).transpose();
    const Eigen::VectorXd nb = rho.diagonal();
    const Eigen::VectorXd vh = model.K * nb;
    const Eigen::VectorXd vx = vt - vh;

    // pointwise solve of the kernel identity for v_x
    Eigen::VectorXd raw(m);
    for (int x = 0; x < m; ++x) {
      double num = 0.0;
      for (int x1 = 0; x1 < m; ++x1) {
        num += (vx[x1] - model.K(x, x1)) * rho(x, x1) * rho(x, x1);
        for (int x2 = 0; x2 < m; ++x2)
          num += rho(x, x1) * rho(x1, x2) * rho(x2, x) * model.K(x1, x2);
      }
      raw[x] = num / nb[x];
    }

    // constant from the alpha-weighted scalar condition
    Eigen::MatrixXd rho_a = rho + (alpha - beta) * orbs.col(n) * orbs.col(n).transpose();
    const Eigen::VectorXd na = rho_a.diagonal();
    const Eigen::VectorXd vh_a = model.K * na;
    const Eigen::VectorXd vxa = raw + vh - vh_a;
    double g_a = vxa.dot(na) + 0.5 * vh_a.dot(na);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        g_a += 0.5 * rho_a(x, y) * rho_a(x, y) * model.K(x, y);
    const double c = -g_a / na.sum();

    const Eigen::VectorXd vt_new = raw.array() + c + vh.array();
    const double delta = (vt_new - vt).cwiseAbs().maxCoeff();
    vt += mixing * (vt_new - vt);
    if (delta < tol)
      break;
  }

  DiscreteSolveResult res;
  res.v_tilde = vt;
  res.iterations = it;
  res.residual =
      evaluate_lhf_condition(model, vt, n, alpha).max_residual;
  return res;
}

} // namespace lhfatom::wick
