#include "wick/rdm.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace lhfatom::wick {

namespace {

int pow_int(int b, int e) {
  int r = 1;
  while (e--)
    r *= b;
  return r;
}

// G(x_1..x_k) = Psi(x_k)...Psi(x_1)|Phi> applied in index order;
// rho_k[(x),(x')] = <G(x')|G(x)>.
std::vector<StateVec> annihilation_chains(const DeterminantState &st, int k) {
  const int m = st.m;
  std::vector<StateVec> cur{st.assemble()};
  for (int depth = 0; depth < k; ++depth) {
    std::vector<StateVec> nxt;
    nxt.reserve(cur.size() * m);
    for (const auto &v : cur)
      for (int s = 0; s < m; ++s)
        nxt.push_back(apply_annihilate_site(m, s, v));
    cur = std::move(nxt);
  }
  // composite index of (x_1..x_k) with x_1 the slowest: entry
  // i = x_1*m^(k-1) + x_2*m^(k-2) + ... + x_k
  return cur;
}

} // namespace

Eigen::MatrixXcd rdm_bruteforce(const DeterminantState &st, int k) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("rdm_bruteforce: order k must be 1..3");
  const int dim = pow_int(st.m, k);
  const auto chains = annihilation_chains(st, k);
  Eigen::MatrixXcd rho(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      rho(a, b) = chains[b].dot(chains[a]);
  return rho;
}

Eigen::MatrixXcd rdm_bruteforce(const FractionalEnsemble &ens, int k) {
  ens.validate();
  return (1.0 - ens.gamma) * rdm_bruteforce(ens.lower, k) +
         ens.gamma * rdm_bruteforce(ens.upper(), k);
}

Eigen::MatrixXcd wick_factorization(const Eigen::MatrixXcd &rdm1, int k) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("wick_factorization: order k must be 1..3");
  const int m = static_cast<int>(rdm1.rows());
  const int dim = pow_int(m, k);
  Eigen::MatrixXcd rho(dim, dim);
  std::vector<int> xs(k), ys(k);
  Eigen::MatrixXcd minor(k, k);
  for (int a = 0; a < dim; ++a) {
    int t = a;
    for (int i = k - 1; i >= 0; --i) {
      xs[i] = t % m;
      t /= m;
    }
    for (int b = 0; b < dim; ++b) {
      t = b;
      for (int i = k - 1; i >= 0; --i) {
        ys[i] = t % m;
        t /= m;
      }
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          minor(i, j) = rdm1(xs[i], ys[j]);
      rho(a, b) = minor.determinant();
    }
  }
  return rho;
}

IdempotencyReport idempotency_check(const Eigen::MatrixXcd &rdm1) {
  IdempotencyReport rep;
  rep.deviation = (rdm1 * rdm1 - rdm1).norm();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rdm1);
  rep.occupations = es.eigenvalues().reverse();
  return rep;
}

WickCheck generalized_wick_check(const FractionalEnsemble &ens,
                                 std::span<const FieldOp> ops) {
  WickCheck chk;
  chk.lhs = expectation(ens, ops);
  if (ops.size() % 2 != 0) {
    chk.rhs = 0.0;
    chk.gap = std::abs(chk.lhs - chk.rhs);
    return chk;
  }

  // memoized ensemble pair contractions <O_i O_j>
  std::map<std::pair<int, int>, Cplx> pair_cache;
  auto contraction = [&](int i, int j) {
    const auto key = std::make_pair(i, j);
    if (auto it = pair_cache.find(key); it != pair_cache.end())
      return it->second;
    const FieldOp pair[2] = {ops[static_cast<std::size_t>(i)],
                             ops[static_cast<std::size_t>(j)]};
    const Cplx v = expectation(ens, pair);
    pair_cache[key] = v;
    return v;
  };

  // recursive sum over complete pairing schemes with parity signs:
  // pairing position 0 with position p costs (-1)^(p-1)
  std::vector<int> live(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i)
    live[i] = static_cast<int>(i);
  auto rec = [&](auto &&self, std::vector<int> &idx) -> Cplx {
    if (idx.empty())
      return 1.0;
    Cplx sum = 0.0;
    const int first = idx.front();
    for (std::size_t p = 1; p < idx.size(); ++p) {
      const double sign = (p % 2 == 1) ? 1.0 : -1.0;
      const Cplx c = contraction(first, idx[p]);
      if (c != Cplx{}) {
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t q = 1; q < idx.size(); ++q)
          if (q != p)
            rest.push_back(idx[q]);
        sum += sign * c * self(self, rest);
      }
    }
    return sum;
  };
  chk.rhs = rec(rec, live);
  chk.gap = std::abs(chk.lhs - chk.rhs);
  return chk;
}

} // namespace lhfatom::wick
