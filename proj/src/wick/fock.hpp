#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace lhfatom::wick {

using Cplx = std::complex<double>;
using StateVec = Eigen::VectorXcd;

//! Fermionic Fock space over m <= 12 single-particle modes, dimension 2^m.
//! Basis states are occupation bitmasks with the convention
//! |mask> = (a_0^+)^{n_0} (a_1^+)^{n_1} ... |0>.
int fock_dim(int m);
StateVec vacuum(int m);

//! a_site^+ | psi > and a_site | psi > with fermionic signs.
StateVec apply_create_site(int m, int site, const StateVec &psi);
StateVec apply_annihilate_site(int m, int site, const StateVec &psi);

//! Creation/annihilation of a general mode phi = sum_s coeff[s] |s>.
StateVec apply_mode(int m, const Eigen::VectorXcd &coeff, bool dagger,
                    const StateVec &psi);

//! Slater determinant over an orbital basis given by the unitary column
//! matrix `orbitals` (column i = orbital i in the site basis); `occ` is the
//! orbital-index bitmask.
struct DeterminantState {
  int m{0};
  std::uint32_t occ{0};
  Eigen::MatrixXcd orbitals;

  int particles() const;
  StateVec assemble() const; //!< creation operators applied in ascending order

  //! Checks unitarity of the orbital matrix to 1e-12.
  void validate() const;
};

//! Statistical mixture (1-gamma)|N><N| + gamma|N+1><N+1| where the upper
//! state adds exactly one orbital.
struct FractionalEnsemble {
  DeterminantState lower;
  int added_orbital{0};
  double gamma{0.0};

  DeterminantState upper() const;
  void validate() const;
};

//! One creation (dagger) or annihilation operator of orbital `index`.
struct FieldOp {
  bool dagger{false};
  int index{0};
};

//! Exact expectation value of an operator string (leftmost applied last)
//! by explicit operator application on the determinant expansion.
Cplx expectation(const DeterminantState &st, std::span<const FieldOp> ops);
Cplx expectation(const FractionalEnsemble &ens, std::span<const FieldOp> ops);

//! Haar-ish random unitary from the QR factorization of a Gaussian matrix.
Eigen::MatrixXcd random_unitary(int m, std::uint64_t seed);

} // namespace lhfatom::wick
