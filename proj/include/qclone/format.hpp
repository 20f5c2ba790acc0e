#pragma once

#include <string>
#include <vector>

#include "qclone/matrix.hpp"

namespace qclone {

// %.17g: shortest text that round-trips an IEEE double exactly.
std::string format_g17(double v);

// One line per entry: i,j,re,im with zero-based indices, row-major order.
std::vector<std::string> matrix_dump_lines(const CMat& m);

}  // namespace qclone
