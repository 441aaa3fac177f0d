#include "io/format.hpp"

#include <cstdio>

namespace lhfatom::io {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string> &cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i)
      row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

} // namespace lhfatom::io
