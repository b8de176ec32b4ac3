#include "posmap/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "posmap/errors.hpp"

namespace posmap {

const char* to_string(Subsystem s) { return s == Subsystem::A ? "A" : "B"; }

Subsystem parse_subsystem(const std::string& s) {
  if (s == "A" || s == "a") return Subsystem::A;
  if (s == "B" || s == "b") return Subsystem::B;
  throw ParseError("subsystem must be A or B, got '" + s + "'");
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

HermitianMatrix::HermitianMatrix(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw ContractViolation("HermitianMatrix: expected a non-empty square matrix");
  if (!is_hermitian(m, tol)) throw ContractViolation("HermitianMatrix: input is not Hermitian");
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::hermitian_part(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw ContractViolation("HermitianMatrix: expected a non-empty square matrix");
  return HermitianMatrix(Matrix(0.5 * (m + m.adjoint())), Unchecked{});
}

HermitianMatrix HermitianMatrix::identity(Index d) {
  return HermitianMatrix(Matrix::Identity(d, d), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(Index d) { return HermitianMatrix(Matrix::Zero(d, d), Unchecked{}); }

HermitianMatrix HermitianMatrix::diagonal(const RealVector& diag) {
  return HermitianMatrix(Matrix(diag.cast<Complex>().asDiagonal()), Unchecked{});
}

HermitianMatrix HermitianMatrix::projector(const Vector& v) {
  return HermitianMatrix(Matrix(v * v.adjoint()), Unchecked{});
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (o.dim() != dim()) throw DimensionMismatch("HermitianMatrix +: dimension mismatch");
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  if (o.dim() != dim()) throw DimensionMismatch("HermitianMatrix -: dimension mismatch");
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double c) {
  m_ *= c;
  return *this;
}

Matrix Spectrum::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

namespace {

void fix_phase(Eigen::Ref<Vector> v) {
  for (Index k = 0; k < v.size(); ++k) {
    double a = std::abs(v(k));
    if (a > 1e-8) {
      v *= std::conj(v(k)) / a;
      v(k) = a;
      return;
    }
  }
}

bool lex_less(const Vector& x, const Vector& y) {
  constexpr double tol = 1e-9;
  for (Index k = 0; k < x.size(); ++k) {
    if (std::abs(x(k).real() - y(k).real()) > tol) return x(k).real() < y(k).real();
    if (std::abs(x(k).imag() - y(k).imag()) > tol) return x(k).imag() < y(k).imag();
  }
  return false;
}

}  // namespace

Spectrum eig_hermitian(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.matrix());
  if (es.info() != Eigen::Success) throw ConsistencyError("eig_hermitian: solver did not converge");
  const Index n = m.dim();
  Spectrum s;
  s.values = es.eigenvalues().reverse();
  s.vectors = es.eigenvectors().rowwise().reverse();
  for (Index k = 0; k < n; ++k) fix_phase(s.vectors.col(k));

  double scale = std::max(1.0, s.values.cwiseAbs().maxCoeff());
  Index start = 0;
  while (start < n) {
    Index end = start + 1;
    while (end < n && s.values(end - 1) - s.values(end) <= kDegeneracyTol * scale) ++end;
    if (end - start > 1) {
      std::vector<Index> order(end - start);
      std::iota(order.begin(), order.end(), start);
      std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
        return lex_less(s.vectors.col(i), s.vectors.col(j));
      });
      Matrix block(n, end - start);
      RealVector vals(end - start);
      for (Index k = 0; k < end - start; ++k) {
        block.col(k) = s.vectors.col(order[k]);
        vals(k) = s.values(order[k]);
      }
      s.vectors.middleCols(start, end - start) = block;
      // keep the descending invariant exact inside the block
      std::sort(vals.data(), vals.data() + vals.size(), std::greater<>());
      s.values.segment(start, end - start) = vals;
    }
    start = end;
  }
  return s;
}

RealVector eigenvalues(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConsistencyError("eigenvalues: solver did not converge");
  return es.eigenvalues().reverse();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermitianMatrix tensor(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix::hermitian_part(kron(a.matrix(), b.matrix()));
}

namespace {

void check_dims(const HermitianMatrix& m, Dims dims, const char* what) {
  if (dims.a < 1 || dims.b < 1 || m.dim() != dims.total())
    throw DimensionMismatch(std::string(what) + ": matrix dimension " + std::to_string(m.dim()) +
                            " does not match " + std::to_string(dims.a) + "x" + std::to_string(dims.b));
}

}  // namespace

HermitianMatrix partial_trace(const HermitianMatrix& m, Dims dims, Subsystem keep) {
  check_dims(m, dims, "partial_trace");
  const Matrix& x = m.matrix();
  const Index da = dims.a, db = dims.b;
  Matrix out;
  if (keep == Subsystem::A) {
    out = Matrix::Zero(da, da);
    for (Index i = 0; i < da; ++i)
      for (Index j = 0; j < da; ++j) out(i, j) = x.block(i * db, j * db, db, db).trace();
  } else {
    out = Matrix::Zero(db, db);
    for (Index i = 0; i < da; ++i) out += x.block(i * db, i * db, db, db);
  }
  return HermitianMatrix::hermitian_part(out);
}

HermitianMatrix partial_transpose(const HermitianMatrix& m, Dims dims, Subsystem side) {
  check_dims(m, dims, "partial_transpose");
  const Matrix& x = m.matrix();
  const Index da = dims.a, db = dims.b;
  Matrix out(x.rows(), x.cols());
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) {
      if (side == Subsystem::B)
        out.block(i * db, j * db, db, db) = x.block(i * db, j * db, db, db).transpose();
      else
        out.block(i * db, j * db, db, db) = x.block(j * db, i * db, db, db);
    }
  return HermitianMatrix::hermitian_part(out);
}

Matrix swap_subsystems(const Matrix& m, Dims dims) {
  const Index da = dims.a, db = dims.b;
  if (m.rows() != da * db || m.cols() != da * db)
    throw DimensionMismatch("swap_subsystems: dimension mismatch");
  Matrix out(m.rows(), m.cols());
  for (Index ia = 0; ia < da; ++ia)
    for (Index ib = 0; ib < db; ++ib)
      for (Index ja = 0; ja < da; ++ja)
        for (Index jb = 0; jb < db; ++jb) out(ib * da + ia, jb * da + ja) = m(ia * db + ib, ja * db + jb);
  return out;
}

double psd_tolerance(double norm, double tol) { return tol * std::max(1.0, norm); }

HermitianMatrix matrix_power(const Spectrum& s, double r, bool use_pseudoinverse) {
  const Index n = s.size();
  const double lmax_abs = s.values.cwiseAbs().maxCoeff();
  RealVector f = RealVector::Zero(n);
  const bool positive_integer = r >= 1 && r == std::floor(r);
  if (positive_integer) {
    for (Index k = 0; k < n; ++k) f(k) = std::pow(s.values(k), r);
  } else {
    if (s.min() < -psd_tolerance(lmax_abs))
      throw DomainError("matrix_power: negative eigenvalue " + std::to_string(s.min()) +
                        " with non-integer exponent");
    const double cut = kRankCutoff * std::max(s.max(), 0.0);
    for (Index k = 0; k < n; ++k) {
      double l = s.values(k);
      if (l > cut && l > 0) {
        f(k) = r == 0 ? 1.0 : std::pow(l, r);
      } else if (r < 0 && !use_pseudoinverse) {
        throw DomainError("matrix_power: singular matrix with negative exponent");
      }
    }
  }
  return HermitianMatrix::hermitian_part(s.vectors * f.cast<Complex>().asDiagonal() * s.vectors.adjoint());
}

HermitianMatrix matrix_power(const HermitianMatrix& m, double r, bool use_pseudoinverse) {
  return matrix_power(eig_hermitian(m), r, use_pseudoinverse);
}

double operator_norm(const HermitianMatrix& m) { return eigenvalues(m).cwiseAbs().maxCoeff(); }

HermitianMatrix support_projector(const HermitianMatrix& m, double cutoff) {
  Spectrum s = eig_hermitian(m);
  const double cut = cutoff * std::max(s.max(), 0.0);
  Matrix p = Matrix::Zero(m.dim(), m.dim());
  for (Index k = 0; k < s.size(); ++k)
    if (s.values(k) > cut && s.values(k) > 0) p += s.vectors.col(k) * s.vectors.col(k).adjoint();
  return HermitianMatrix::hermitian_part(p);
}

Index rank(const HermitianMatrix& m, double cutoff) {
  RealVector v = eigenvalues(m);
  const double cut = cutoff * std::max(v(0), 0.0);
  Index r = 0;
  for (Index k = 0; k < v.size(); ++k)
    if (v(k) > cut && v(k) > 0) ++r;
  return r;
}

bool is_psd(const HermitianMatrix& m, double tol) {
  RealVector v = eigenvalues(m);
  return v(v.size() - 1) >= -tol * std::max(1.0, v.cwiseAbs().maxCoeff());
}

double trace_product(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

}  // namespace posmap
