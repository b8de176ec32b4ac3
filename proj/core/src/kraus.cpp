#include "posmap/kraus.hpp"

#include <cmath>
#include <string>

#include "posmap/errors.hpp"

namespace posmap {

KrausMap::KrausMap(std::vector<Matrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw ContractViolation("KrausMap: at least one Kraus operator required");
  dim_ = ops_.front().rows();
  if (dim_ < 1) throw ContractViolation("KrausMap: empty Kraus operator");
  for (const auto& v : ops_)
    if (v.rows() != dim_ || v.cols() != dim_)
      throw DimensionMismatch("KrausMap: Kraus operators must be square with equal dimension");
}

KrausMap KrausMap::zero(Index d) { return KrausMap({Matrix::Zero(d, d)}); }

KrausMap KrausMap::from_choi(const HermitianMatrix& choi, double cutoff) {
  const Index n = choi.dim();
  const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) throw DimensionMismatch("KrausMap::from_choi: Choi dimension is not a square");
  Spectrum s = eig_hermitian(choi);
  const double scale = std::max(1.0, s.values.cwiseAbs().maxCoeff());
  if (s.min() < -kPsdTol * scale)
    throw ConsistencyError("KrausMap::from_choi: Choi matrix not PSD (lambda_min = " +
                           std::to_string(s.min()) + ")");
  std::vector<Matrix> ops;
  const double cut = cutoff * std::max(s.max(), 0.0);
  for (Index k = 0; k < n; ++k) {
    if (!(s.values(k) > cut && s.values(k) > 0)) continue;
    Matrix v(d, d);
    const double w = std::sqrt(s.values(k));
    for (Index i = 0; i < d; ++i)
      for (Index a = 0; a < d; ++a) v(a, i) = w * s.vectors(i * d + a, k);
    ops.push_back(std::move(v));
  }
  if (ops.empty()) return zero(d);
  return KrausMap(std::move(ops));
}

Matrix KrausMap::apply(const Matrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw DimensionMismatch("apply_map: dimension mismatch");
  Matrix out = Matrix::Zero(dim_, dim_);
  for (const auto& v : ops_) out.noalias() += v * x * v.adjoint();
  return out;
}

HermitianMatrix KrausMap::apply(const HermitianMatrix& x) const {
  return HermitianMatrix::hermitian_part(apply(x.matrix()));
}

KrausMap KrausMap::adjoint() const {
  std::vector<Matrix> ops;
  ops.reserve(ops_.size());
  for (const auto& v : ops_) ops.push_back(v.adjoint());
  return KrausMap(std::move(ops));
}

KrausMap KrausMap::scaled(double c) const {
  if (c < 0) throw ContractViolation("KrausMap::scaled: negative factor");
  std::vector<Matrix> ops = ops_;
  const double w = std::sqrt(c);
  for (auto& v : ops) v *= w;
  return KrausMap(std::move(ops));
}

KrausMap KrausMap::with_op(const Matrix& v) const {
  if (v.rows() != dim_ || v.cols() != dim_) throw DimensionMismatch("KrausMap::with_op: dimension mismatch");
  std::vector<Matrix> ops = ops_;
  ops.push_back(v);
  return KrausMap(std::move(ops));
}

KrausMap KrausMap::combined(const KrausMap& other) const {
  if (other.dim() != dim_) throw DimensionMismatch("KrausMap::combined: dimension mismatch");
  std::vector<Matrix> ops = ops_;
  ops.insert(ops.end(), other.ops_.begin(), other.ops_.end());
  return KrausMap(std::move(ops));
}

HermitianMatrix choi_matrix(const KrausMap& map) {
  const Index d = map.dim();
  Matrix c = Matrix::Zero(d * d, d * d);
  Vector w(d * d);
  for (const auto& v : map.ops()) {
    for (Index i = 0; i < d; ++i)
      for (Index a = 0; a < d; ++a) w(i * d + a) = v(a, i);
    c.noalias() += w * w.adjoint();
  }
  return HermitianMatrix::hermitian_part(c);
}

HermitianMatrix choi_from_action(Index d, const std::function<Matrix(const Matrix&)>& action) {
  Matrix c = Matrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Matrix e = Matrix::Zero(d, d);
      e(i, j) = 1.0;
      c.block(i * d, j * d, d, d) = action(e);
    }
  return HermitianMatrix(c, 1e-10);
}

Index kraus_rank(const KrausMap& map, double cutoff) { return rank(choi_matrix(map), cutoff); }

bool is_completely_positive(const HermitianMatrix& choi, double tol) {
  return eigenvalues(choi).minCoeff() >= -tol;
}

Matrix apply_choi(const HermitianMatrix& choi, const Matrix& x) {
  const Index d = x.rows();
  if (choi.dim() != d * d) throw DimensionMismatch("apply_choi: dimension mismatch");
  Matrix out = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) out += x(i, j) * choi.matrix().block(i * d, j * d, d, d);
  return out;
}

HermitianMatrix apply_map(const KrausMap& map, const HermitianMatrix& x) { return map.apply(x); }

namespace {

Index mapped_dim(Dims dims, Subsystem side, Index map_dim, Index rho_dim) {
  if (rho_dim != dims.total()) throw DimensionMismatch("apply_extended: state dimension mismatch");
  if (dims.of(side) != map_dim)
    throw DimensionMismatch("apply_extended: map dimension " + std::to_string(map_dim) +
                            " != subsystem " + to_string(side) + " dimension " +
                            std::to_string(dims.of(side)));
  return map_dim;
}

// [I (x) Lambda] on a d_A x d_B ordered operator; f acts on each d_B block.
template <class F>
Matrix blockwise(const Matrix& rho, Index da, Index db, F&& f) {
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = f(rho.block(i * db, j * db, db, db));
  return out;
}

template <class F>
HermitianMatrix extend(const HermitianMatrix& rho, Dims dims, Subsystem side, F&& f) {
  if (side == Subsystem::B) return HermitianMatrix::hermitian_part(blockwise(rho.matrix(), dims.a, dims.b, f));
  Dims swapped{dims.b, dims.a};
  Matrix r = swap_subsystems(rho.matrix(), dims);
  return HermitianMatrix::hermitian_part(swap_subsystems(blockwise(r, dims.b, dims.a, f), swapped));
}

}  // namespace

HermitianMatrix apply_extended(const KrausMap& map, const HermitianMatrix& rho, Dims dims, Subsystem side) {
  mapped_dim(dims, side, map.dim(), rho.dim());
  return extend(rho, dims, side, [&](const Matrix& x) { return map.apply(Matrix(x)); });
}

HermitianMatrix apply_extended_choi(const HermitianMatrix& choi, const HermitianMatrix& rho, Dims dims,
                                    Subsystem side) {
  const Index d = dims.of(side);
  if (choi.dim() != d * d) throw DimensionMismatch("apply_extended_choi: Choi dimension mismatch");
  mapped_dim(dims, side, d, rho.dim());
  return extend(rho, dims, side, [&](const Matrix& x) { return apply_choi(choi, Matrix(x)); });
}

}  // namespace posmap
