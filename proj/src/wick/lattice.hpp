#pragma once

#include <Eigen/Dense>

namespace lhfatom::wick {

//! Spinless-fermion lattice with single-particle Hamiltonian h0 and a
//! symmetric pair interaction K (zero diagonal) — a tiny discrete model
//! on which the defining self-consistency condition can be evaluated
//! exactly in Fock space.
struct LatticeModel {
  Eigen::MatrixXd h0;
  Eigen::MatrixXd K;

  int sites() const { return static_cast<int>(h0.rows()); }
  void validate() const;
};

//! Both evaluation routes of the weighted condition at baseline n and
//! physical fraction alpha, with the trial screening potential v_tilde:
//! the exact Fock-space expectation per site, and the one-particle-kernel
//! assembly through the Wick-factorized reduced density matrices.
struct DiscreteLhfEval {
  Eigen::VectorXd lhs_bruteforce;
  Eigen::VectorXd lhs_wick;
  double max_residual;  //!< max |lhs_bruteforce|
  double max_route_gap; //!< max |lhs_bruteforce - lhs_wick|
};
DiscreteLhfEval evaluate_lhf_condition(const LatticeModel &model,
                                       const Eigen::VectorXd &v_tilde, int n,
                                       double alpha);

//! <V - U> in the pure n- and (n+1)-particle determinant ground states of
//! h0 + diag(v_tilde); integrating the sitewise condition over sites must
//! reproduce (1-alpha) G_N + alpha G_{N+1}.
struct DiscreteGs {
  double g_lower;
  double g_upper;
};
DiscreteGs bruteforce_g(const LatticeModel &model,
                        const Eigen::VectorXd &v_tilde, int n);

//! Fixed-point solve of the discrete exchange equation for v_tilde
//! (single-species model, so only the alpha-weighted scalar condition
//! pins the constant).
struct DiscreteSolveResult {
  Eigen::VectorXd v_tilde;
  int iterations;
  double residual;
};
DiscreteSolveResult solve_discrete_lhf(const LatticeModel &model, int n,
                                       double alpha, double mixing = 0.5,
                                       int max_iter = 600, double tol = 1e-13);

} // namespace lhfatom::wick
