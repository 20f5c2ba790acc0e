#include "qclone/format.hpp"

#include <cstdio>

namespace qclone {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> matrix_dump_lines(const CMat& m) {
    std::vector<std::string> lines;
    lines.reserve(static_cast<std::size_t>(m.dim() * m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            lines.push_back(std::to_string(i) + "," + std::to_string(j) + "," +
                            format_g17(m(i, j).real()) + "," + format_g17(m(i, j).imag()));
        }
    return lines;
}

}  // namespace qclone
