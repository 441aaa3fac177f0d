#pragma once

#include "wick/fock.hpp"

namespace lhfatom::wick {

//! Order-k reduced density matrix over site indices, stored as an
//! m^k x m^k matrix with composite row (x_1..x_k) and column (x'_1..x'_k):
//!   rho_k[(x),(x')] = < Psi+(x'_1)..Psi+(x'_k) Psi(x_k)..Psi(x_1) >.
//! The diagonal (x'=x) is the k-particle density; the trace over one pair
//! of arguments recurses with the N!/(N-k)! prefactor.
Eigen::MatrixXcd rdm_bruteforce(const DeterminantState &st, int k);
Eigen::MatrixXcd rdm_bruteforce(const FractionalEnsemble &ens, int k);

//! Wick assembly of rho_k from rho_1: the k x k determinant
//!   rho_k[(x),(x')] = det[ rho_1(x_i, x'_j) ].
//! Valid verbatim for fractional-ensemble rho_1 by the generalized theorem.
Eigen::MatrixXcd wick_factorization(const Eigen::MatrixXcd &rdm1, int k);

struct IdempotencyReport {
  double deviation; //!< Frobenius norm of rho^2 - rho
  Eigen::VectorXd occupations;
};
IdempotencyReport idempotency_check(const Eigen::MatrixXcd &rdm1);

//! Generalized Wick check on an operator string: lhs is the brute-force
//! ensemble expectation, rhs the sum over complete pairings with ensemble
//! pair contractions and fermionic parity signs.
struct WickCheck {
  Cplx lhs;
  Cplx rhs;
  double gap;
};
WickCheck generalized_wick_check(const FractionalEnsemble &ens,
                                 std::span<const FieldOp> ops);

} // namespace lhfatom::wick
