#include "radial/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace lhfatom::radial {

namespace {

// Working mesh for the shooting sweeps. In the log variable x = ln r the
// substitution u = sqrt(r) w turns the radial equation into
//   w'' = Q(x) w,  Q = (l+1/2)^2 + 2 r^2 (v - eps).
struct Mesh {
  std::vector<double> r;
  double dx;
};

std::vector<double> make_q(const Mesh &m, const std::vector<double> &v, int l,
                           double eps) {
  const auto n = m.r.size();
  std::vector<double> q(n);
  const double lh = (l + 0.5) * (l + 0.5);
  for (std::size_t i = 0; i < n; ++i)
    q[i] = lh + 2.0 * m.r[i] * m.r[i] * (v[i] - eps);
  return q;
}

// One propagation step of w'' = Q w. Numerov where the scheme is regular;
// when a denominator 1 - dx^2 Q/12 degenerates (deep classically forbidden
// region at far-off probe energies) fall back to the plain 3-point step,
// which has no denominator. Such steps only ever occur where the solution
// is exponentially irrelevant.
inline double propagate(double wp, double wc, double qm, double q0, double qp,
                        double dx) {
  const double c = dx * dx / 12.0;
  // For c*Q > 1 the Numerov factors turn oscillatory and fake sign changes;
  // that regime lies deep inside classically forbidden tails, where the
  // 3-point step is safe.
  if (c * std::max({qm, q0, qp}) > 0.5)
    return (2.0 + dx * dx * q0) * wc - wp;
  return (2.0 * wc * (1.0 + 5.0 * c * q0) - wp * (1.0 - c * qm)) /
         (1.0 - c * qp);
}

// Full outward sweep; returns the node count of w on the open interval.
// The count is a step function of eps jumping by one at each eigenvalue.
int count_nodes_sweep(const Mesh &m, const std::vector<double> &q, int l) {
  const auto n = m.r.size();
  double wp = std::pow(m.r[0] / m.r[1], l + 0.5);
  double wc = 1.0;
  int nodes = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double wn = propagate(wp, wc, q[i - 1], q[i], q[i + 1], m.dx);
    if (wc != 0.0 && wn * wc < 0.0)
      ++nodes;
    if (std::abs(wn) > 1.0e250) {
      wn *= 1.0e-250;
      wc *= 1.0e-250;
    }
    wp = wc;
    wc = wn;
  }
  return nodes;
}

// Assemble the eigenfunction at converged eps: outward to the outermost
// turning point, inward from the wall, glued by value at the match point.
std::vector<double> assemble_u(const Mesh &m, const std::vector<double> &v,
                               int l, double eps, int *nodes_out) {
  const auto n = m.r.size();
  const auto q = make_q(m, v, l, eps);

  std::size_t im = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (q[i] < 0.0)
      im = i;
  im = std::clamp<std::size_t>(im, 2, n - 3);

  std::vector<double> w(n, 0.0);
  w[0] = std::pow(m.r[0] / m.r[1], l + 0.5);
  w[1] = 1.0;
  for (std::size_t i = 1; i <= im; ++i) {
    w[i + 1] = propagate(w[i - 1], w[i], q[i - 1], q[i], q[i + 1], m.dx);
    if (std::abs(w[i + 1]) > 1.0e200) {
      for (std::size_t j = 0; j <= i + 1; ++j)
        w[j] *= 1.0e-200;
    }
  }

  std::vector<double> win(n, 0.0);
  const double kap = std::sqrt(std::max(q[n - 1], 1.0e-30));
  win[n - 1] = 1.0e-150;
  win[n - 2] = win[n - 1] * std::exp(std::min(kap * m.dx, 300.0));
  for (std::size_t i = n - 2; i > im; --i) {
    win[i - 1] = propagate(win[i + 1], win[i], q[i + 1], q[i], q[i - 1], m.dx);
    if (std::abs(win[i - 1]) > 1.0e200) {
      for (std::size_t j = i - 1; j < n; ++j)
        win[j] *= 1.0e-200;
    }
  }
  const double scale = (win[im] != 0.0) ? w[im] / win[im] : 0.0;
  for (std::size_t i = im + 1; i < n; ++i)
    w[i] = win[i] * scale;

  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = std::sqrt(m.r[i]) * w[i];

  double umax = 0.0;
  for (double x : u)
    umax = std::max(umax, std::abs(x));
  int nodes = 0;
  double prev = 0.0;
  for (double x : u) {
    if (std::abs(x) < 1.0e-12 * umax)
      continue;
    if (prev != 0.0 && x * prev < 0.0)
      ++nodes;
    prev = x;
  }
  if (nodes_out)
    *nodes_out = nodes;
  return u;
}

// Lower bound for the spectrum: with A = sup of -r v(r) and B = sup of the
// remaining depth, v >= -A/r - B pointwise, so eps >= -A^2/2 - B.
double spectrum_floor(const Mesh &m, const std::vector<double> &v) {
  double A = 0.0;
  for (std::size_t i = 0; i < m.r.size(); ++i)
    A = std::max(A, -v[i] * m.r[i]);
  double B = 0.0;
  for (std::size_t i = 0; i < m.r.size(); ++i)
    B = std::max(B, -(v[i] + A / m.r[i]));
  return -0.5 * A * A - B - 1.0;
}

// Eigenvalue with the requested node count via node-count bisection.
std::optional<double> solve_nodes(const Mesh &m, const std::vector<double> &v,
                                  int l, int target, int max_bisect) {
  const auto n = m.r.size();
  const double e_hi =
      v[n - 1] + l * (l + 1) / (2.0 * m.r[n - 1] * m.r[n - 1]);
  const double e_lo = spectrum_floor(m, v);
  if (!(e_lo < e_hi))
    return std::nullopt;

  auto nodes_at = [&](double eps) {
    return count_nodes_sweep(m, make_q(m, v, l, eps), l);
  };
  if (nodes_at(e_hi) <= target)
    return std::nullopt; // fewer bound states than requested
  double lo = e_lo, hi = e_hi;
  for (int it = 0; it < max_bisect; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (nodes_at(mid) > target)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1.0e-15 * std::max(1.0, std::abs(lo)))
      return 0.5 * (lo + hi);
  }
  std::ostringstream os;
  os << "solve_bound_states: bisection failed to close, l=" << l
     << " nodes=" << target << " bracket=[" << lo << ", " << hi << "]";
  throw SolverError(os.str());
}

Mesh coarse_mesh(const RadialGrid &g) {
  Mesh m;
  m.dx = 2.0 * g.dx;
  for (std::size_t i = 0; i < g.size(); i += 2)
    m.r.push_back(g.r[i]);
  return m;
}

} // namespace

std::vector<BoundState> solve_bound_states(const RadialGrid &g,
                                           const std::vector<double> &v, int l,
                                           int n_states,
                                           const ShootingOptions &opt) {
  validate_grid(g);
  require_on_grid(g, v);
  if (l < 0 || n_states < 1)
    throw std::invalid_argument("solve_bound_states: need l >= 0, n_states >= 1");

  Mesh fine{g.r, g.dx};
  Mesh coarse;
  std::vector<double> v_coarse;
  if (opt.richardson) {
    coarse = coarse_mesh(g);
    v_coarse.reserve(coarse.r.size());
    for (std::size_t i = 0; i < g.size(); i += 2)
      v_coarse.push_back(v[i]);
  }

  std::vector<BoundState> out;
  for (int target = 0; target < n_states; ++target) {
    auto eps_f = solve_nodes(fine, v, l, target, opt.max_bisect);
    if (!eps_f)
      break;
    double eps = *eps_f;
    if (opt.richardson) {
      // Numerov eigenvalue errors scale as dx^4; extrapolating against the
      // half-resolution mesh removes the leading term.
      if (auto eps_c = solve_nodes(coarse, v_coarse, l, target, opt.max_bisect))
        eps = *eps_f + (*eps_f - *eps_c) / 15.0;
    }

    BoundState st;
    st.eps = eps;
    st.u = assemble_u(fine, v, l, *eps_f, &st.nodes);
    if (st.nodes != target) {
      std::ostringstream os;
      os << "solve_bound_states: node-count check failed, l=" << l
         << " expected " << target << " nodes, built " << st.nodes
         << " (eps=" << *eps_f << ")";
      throw SolverError(os.str());
    }
    const double nrm = integrate_product(g, st.u, st.u);
    if (!(nrm > 0.0))
      throw SolverError("solve_bound_states: zero-norm eigenfunction");
    const double s = 1.0 / std::sqrt(nrm);
    for (double &x : st.u)
      x *= s;
    double umax = 0.0;
    for (double x : st.u)
      umax = std::max(umax, std::abs(x));
    for (double x : st.u) {
      if (std::abs(x) > 1.0e-8 * umax) {
        if (x < 0.0)
          for (double &y : st.u)
            y = -y;
        break;
      }
    }
    out.push_back(std::move(st));
  }
  return out;
}

} // namespace lhfatom::radial
