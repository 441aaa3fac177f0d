#include "wick/fock.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace lhfatom::wick {

int fock_dim(int m) {
  if (m < 1 || m > 12)
    throw std::invalid_argument("fock space: need 1 <= m <= 12 modes");
  return 1 << m;
}

StateVec vacuum(int m) {
  StateVec v = StateVec::Zero(fock_dim(m));
  v[0] = 1.0;
  return v;
}

namespace {
inline int parity_below(std::uint32_t mask, int site) {
  return std::popcount(mask & ((1u << site) - 1u)) & 1 ? -1 : 1;
}
} // namespace

StateVec apply_create_site(int m, int site, const StateVec &psi) {
  const int dim = fock_dim(m);
  StateVec out = StateVec::Zero(dim);
  const std::uint32_t bit = 1u << site;
  for (int mask = 0; mask < dim; ++mask) {
    if (psi[mask] == Cplx{} || (static_cast<std::uint32_t>(mask) & bit))
      continue;
    out[mask | bit] +=
        static_cast<double>(parity_below(mask, site)) * psi[mask];
  }
  return out;
}

StateVec apply_annihilate_site(int m, int site, const StateVec &psi) {
  const int dim = fock_dim(m);
  StateVec out = StateVec::Zero(dim);
  const std::uint32_t bit = 1u << site;
  for (int mask = 0; mask < dim; ++mask) {
    if (psi[mask] == Cplx{} || !(static_cast<std::uint32_t>(mask) & bit))
      continue;
    out[mask & ~bit] +=
        static_cast<double>(parity_below(mask, site)) * psi[mask];
  }
  return out;
}

StateVec apply_mode(int m, const Eigen::VectorXcd &coeff, bool dagger,
                    const StateVec &psi) {
  StateVec out = StateVec::Zero(fock_dim(m));
  for (int s = 0; s < m; ++s) {
    const Cplx c = dagger ? coeff[s] : std::conj(coeff[s]);
    if (c == Cplx{})
      continue;
    out += c * (dagger ? apply_create_site(m, s, psi)
                       : apply_annihilate_site(m, s, psi));
  }
  return out;
}

int DeterminantState::particles() const { return std::popcount(occ); }

void DeterminantState::validate() const {
  if (orbitals.rows() != m || orbitals.cols() != m)
    throw std::invalid_argument("determinant state: orbital matrix shape");
  const Eigen::MatrixXcd d =
      orbitals.adjoint() * orbitals - Eigen::MatrixXcd::Identity(m, m);
  if (d.cwiseAbs().maxCoeff() > 1.0e-12)
    throw std::invalid_argument("determinant state: orbital matrix not unitary");
}

StateVec DeterminantState::assemble() const {
  validate();
  StateVec v = vacuum(m);
  for (int i = 0; i < m; ++i) {
    if (occ & (1u << i))
      v = apply_mode(m, orbitals.col(i), true, v);
  }
  return v;
}

DeterminantState FractionalEnsemble::upper() const {
  DeterminantState up = lower;
  up.occ |= 1u << added_orbital;
  return up;
}

void FractionalEnsemble::validate() const {
  lower.validate();
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("fractional ensemble: gamma outside [0,1]");
  if (lower.occ & (1u << added_orbital))
    throw std::invalid_argument(
        "fractional ensemble: added orbital already occupied");
}

Cplx expectation(const DeterminantState &st, std::span<const FieldOp> ops) {
  if (ops.size() % 2 != 0)
    return 0.0; // odd strings change particle-number parity
  const StateVec bra = st.assemble();
  StateVec ket = bra;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    ket = apply_mode(st.m, st.orbitals.col(it->index), it->dagger, ket);
  return bra.dot(ket);
}

Cplx expectation(const FractionalEnsemble &ens, std::span<const FieldOp> ops) {
  ens.validate();
  const Cplx lo = expectation(ens.lower, ops);
  const Cplx hi = expectation(ens.upper(), ops);
  return (1.0 - ens.gamma) * lo + ens.gamma * hi;
}

Eigen::MatrixXcd random_unitary(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXcd a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a(i, j) = Cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  // fix the phase convention so the result is reproducible
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < m; ++i) {
    const Cplx d = r(i, i);
    if (d != Cplx{})
      q.col(i) *= d / std::abs(d);
  }
  return q;
}

} // namespace lhfatom::wick
