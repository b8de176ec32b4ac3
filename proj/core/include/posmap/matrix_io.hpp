#pragma once

#include <iosfwd>
#include <string>

#include "posmap/hermitian.hpp"

namespace posmap {

// Plain-text matrix file:
//   dim dA dB
//   row col re im      (dim*dim lines, any order, each entry exactly once)
// Blank lines and lines starting with '#' are ignored.
struct MatrixFile {
  HermitianMatrix matrix;
  Dims dims;
};

MatrixFile read_matrix(std::istream& in);
MatrixFile read_matrix_file(const std::string& path);

// Writes row-major with 17 significant digits, so a read/write round trip is exact.
void write_matrix(std::ostream& out, const HermitianMatrix& m, Dims dims);
void write_matrix_file(const std::string& path, const HermitianMatrix& m, Dims dims);

}  // namespace posmap
