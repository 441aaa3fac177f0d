#pragma once

#include <string>
#include <vector>

namespace lhfatom::io {

//! Fixed 12-significant-digit float formatting; output files must be
//! byte-identical across runs of the same configuration.
std::string fmt(double v);

//! One CSV row from preformatted cells.
std::string csv_row(const std::vector<std::string> &cells);

} // namespace lhfatom::io
