#include "occupations/shells.hpp"

#include <stdexcept>
#include <tuple>

namespace lhfatom::occ {

std::string to_string(Spin s) { return s == Spin::up ? "up" : "down"; }

Spin parse_spin(const std::string &s) {
  if (s == "up" || s == "u")
    return Spin::up;
  if (s == "down" || s == "dn" || s == "d")
    return Spin::down;
  throw std::invalid_argument("bad spin label: '" + s + "'");
}

namespace {
int l_from_letter(char c) {
  switch (c) {
  case 's':
    return 0;
  case 'p':
    return 1;
  case 'd':
    return 2;
  case 'f':
    return 3;
  default:
    return -1;
  }
}
constexpr const char *l_letters = "spdf";
} // namespace

Subshell parse_subshell(const std::string &s) {
  if (s.size() < 2)
    throw std::invalid_argument("bad subshell label: '" + s + "'");
  const int l = l_from_letter(s.back());
  int n = 0;
  try {
    n = std::stoi(s.substr(0, s.size() - 1));
  } catch (...) {
    throw std::invalid_argument("bad subshell label: '" + s + "'");
  }
  if (l < 0 || n < 1 || l >= n)
    throw std::invalid_argument("bad subshell label: '" + s + "'");
  return Subshell{n, l};
}

std::string to_string(const Subshell &sh) {
  return std::to_string(sh.n) + l_letters[sh.l];
}

std::string to_string(const SpinShell &s) {
  return to_string(s.sh) + "_" + to_string(s.spin);
}

bool aufbau_less(const SpinShell &a, const SpinShell &b) {
  const auto key = [](const SpinShell &s) {
    return std::tuple(s.sh.n + s.sh.l, s.sh.n, s.spin == Spin::down ? 1 : 0);
  };
  return key(a) < key(b);
}

} // namespace lhfatom::occ
