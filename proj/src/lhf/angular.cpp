#include "lhf/angular.hpp"

#include <array>
#include <stdexcept>

namespace lhfatom::lhf {

namespace {
// exact factorials up to 30! in long double
long double factl(int n) {
  static const auto table = [] {
    std::array<long double, 31> t{};
    t[0] = 1.0L;
    for (int i = 1; i <= 30; ++i)
      t[i] = t[i - 1] * i;
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}
} // namespace

double threej000_sq(int l1, int l2, int k) {
  if (l1 < 0 || l2 < 0 || k < 0)
    throw std::invalid_argument("threej000_sq: negative argument");
  const int J = l1 + l2 + k;
  if (J % 2 != 0)
    return 0.0;
  if (k < std::abs(l1 - l2) || k > l1 + l2)
    return 0.0;
  if (J > 28)
    throw std::invalid_argument("threej000_sq: momenta out of supported range");
  const int g = J / 2;
  const long double pref = factl(J - 2 * l1) * factl(J - 2 * l2) *
                           factl(J - 2 * k) / factl(J + 1);
  const long double ratio =
      factl(g) / (factl(g - l1) * factl(g - l2) * factl(g - k));
  return static_cast<double>(pref * ratio * ratio);
}

} // namespace lhfatom::lhf
