#include "posmap/matrix_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "posmap/errors.hpp"

namespace posmap {

namespace {

bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw ParseError("matrix file line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

MatrixFile read_matrix(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("matrix file: missing header");
  long long dim = 0, da = 0, db = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> dim >> da >> db) || (hs >> extra)) fail(lineno, "header must be 'dim dA dB'");
  }
  if (dim < 1 || da < 1 || db < 1 || da * db != dim) fail(lineno, "inconsistent header dimensions");
  if (dim > 4096) fail(lineno, "dimension too large");

  Matrix m = Matrix::Zero(dim, dim);
  std::vector<char> seen(static_cast<size_t>(dim * dim), 0);
  long long count = 0;
  while (next_data_line(in, line, lineno)) {
    std::istringstream ls(line);
    long long r, c;
    double re, im;
    std::string extra;
    if (!(ls >> r >> c >> re >> im) || (ls >> extra)) fail(lineno, "expected 'row col re im'");
    if (r < 0 || c < 0 || r >= dim || c >= dim) fail(lineno, "index out of range");
    auto& s = seen[static_cast<size_t>(r * dim + c)];
    if (s) fail(lineno, "duplicate entry");
    s = 1;
    m(r, c) = Complex(re, im);
    ++count;
  }
  if (count != dim * dim)
    throw ParseError("matrix file: expected " + std::to_string(dim * dim) + " entries, got " +
                     std::to_string(count));
  return MatrixFile{HermitianMatrix(m), Dims{da, db}};
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const HermitianMatrix& m, Dims dims) {
  if (dims.total() != m.dim()) throw DimensionMismatch("write_matrix: dims do not match matrix");
  std::ostringstream os;
  os << std::setprecision(17);
  os << m.dim() << ' ' << dims.a << ' ' << dims.b << '\n';
  for (Index i = 0; i < m.dim(); ++i)
    for (Index j = 0; j < m.dim(); ++j)
      os << i << ' ' << j << ' ' << m(i, j).real() << ' ' << m(i, j).imag() << '\n';
  out << os.str();
}

void write_matrix_file(const std::string& path, const HermitianMatrix& m, Dims dims) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write matrix file '" + path + "'");
  write_matrix(out, m, dims);
  if (!out) throw ParseError("error writing matrix file '" + path + "'");
}

}  // namespace posmap
