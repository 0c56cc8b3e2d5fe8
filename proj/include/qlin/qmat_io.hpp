#pragma once

#include <iosfwd>
#include <string>

#include "qlin/qmat.hpp"

namespace qlin {

// QMAT v1 text format:
//   QMAT <rows> <cols>
//   <rows> lines of <cols> whitespace-separated scalar tokens
// Lines beginning with '#' are comments and may appear anywhere.

QuatMatrix read_qmat(std::istream& in);
QuatMatrix read_qmat_file(const std::string& path);

void write_qmat(std::ostream& out, const QuatMatrix& a);
void write_qmat_file(const std::string& path, const QuatMatrix& a);

}  // namespace qlin
