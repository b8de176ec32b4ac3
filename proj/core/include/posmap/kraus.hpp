#pragma once

#include <functional>
#include <vector>

#include "posmap/hermitian.hpp"

namespace posmap {

// Completely positive map X -> sum_i V_i X V_i^+ on d x d matrices.
class KrausMap {
 public:
  explicit KrausMap(std::vector<Matrix> ops);

  // Extracts a minimal Kraus set from a PSD Choi matrix: eigenpairs with
  // lambda > cutoff * lambda_max, V[a][i] = sqrt(lambda) v[i*d + a].
  static KrausMap from_choi(const HermitianMatrix& choi, double cutoff = kRankCutoff);
  static KrausMap zero(Index d);

  Index dim() const { return dim_; }
  size_t length() const { return ops_.size(); }
  const std::vector<Matrix>& ops() const { return ops_; }

  Matrix apply(const Matrix& x) const;
  HermitianMatrix apply(const HermitianMatrix& x) const;

  KrausMap adjoint() const;
  KrausMap scaled(double c) const;  // the map c * Lambda, c >= 0
  KrausMap with_op(const Matrix& v) const;
  KrausMap combined(const KrausMap& other) const;  // Lambda + Lambda'

 private:
  Index dim_;
  std::vector<Matrix> ops_;
};

// Choi matrix C = sum_ij |i><j| (x) Lambda(|i><j|) = d [I (x) Lambda](P+).
HermitianMatrix choi_matrix(const KrausMap& map);
HermitianMatrix choi_from_action(Index d, const std::function<Matrix(const Matrix&)>& action);

// Minimal Kraus length: rank of the Choi matrix at the extraction cutoff.
Index kraus_rank(const KrausMap& map, double cutoff = kRankCutoff);

bool is_completely_positive(const HermitianMatrix& choi, double tol = kPsdTol);

// Applies the map described by a Choi matrix to X.
Matrix apply_choi(const HermitianMatrix& choi, const Matrix& x);

HermitianMatrix apply_map(const KrausMap& map, const HermitianMatrix& x);

// [I (x) Lambda](rho) for side B, [Lambda (x) I](rho) for side A.
HermitianMatrix apply_extended(const KrausMap& map, const HermitianMatrix& rho, Dims dims, Subsystem side);
HermitianMatrix apply_extended_choi(const HermitianMatrix& choi, const HermitianMatrix& rho, Dims dims,
                                    Subsystem side);

}  // namespace posmap
