#pragma once

namespace lhfatom::lhf {

//! Squared Wigner 3j symbol (l1 l2 k; 0 0 0)^2 — the angular weight of the
//! multipole-k channel in closed-shell exchange kernels. Zero unless
//! l1+l2+k is even and the triangle rule holds.
double threej000_sq(int l1, int l2, int k);

} // namespace lhfatom::lhf
