#pragma once

#include <string>
#include <vector>

namespace lhfatom::occ {

enum class Spin { up, down };

inline Spin other(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }
std::string to_string(Spin s);
Spin parse_spin(const std::string &s);

//! One (n,l) subshell, e.g. "2p" = {2,1}.
struct Subshell {
  int n{0};
  int l{0};

  int multiplicity() const { return 2 * l + 1; } //!< per spin channel
  bool operator==(const Subshell &) const = default;
};

Subshell parse_subshell(const std::string &s);
std::string to_string(const Subshell &sh);

//! A subshell in one spin channel.
struct SpinShell {
  Subshell sh;
  Spin spin{Spin::up};

  bool operator==(const SpinShell &) const = default;
};

std::string to_string(const SpinShell &s);

//! Aufbau ordering: (n+l, n, up-before-down). Used to map a total particle
//! number onto a declared shell scheme in scans.
bool aufbau_less(const SpinShell &a, const SpinShell &b);

//! Radial orbital of one subshell: u(r) = r R(r), normalized \int u^2 dr = 1.
struct SpinOrbital {
  Subshell sh;
  Spin spin{Spin::up};
  double eps{0.0};
  std::vector<double> u;

  int multiplicity() const { return sh.multiplicity(); }
};

} // namespace lhfatom::occ
