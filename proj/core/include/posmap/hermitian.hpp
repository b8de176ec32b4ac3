#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace posmap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kRankCutoff = 1e-12;
inline constexpr double kDegeneracyTol = 1e-10;

enum class Subsystem { A, B };

inline Subsystem other(Subsystem s) { return s == Subsystem::A ? Subsystem::B : Subsystem::A; }
const char* to_string(Subsystem s);
Subsystem parse_subsystem(const std::string& s);

struct Dims {
  Index a = 1;
  Index b = 1;

  Index total() const { return a * b; }
  Index of(Subsystem s) const { return s == Subsystem::A ? a : b; }
  bool operator==(const Dims&) const = default;
};

// Dense complex matrix that is Hermitian within kHermiticityTol * max(1, max|entry|).
// The stored entries are exactly Hermitian: the constructor symmetrises after checking.
class HermitianMatrix {
 public:
  HermitianMatrix() : m_(Matrix::Zero(1, 1)) {}
  explicit HermitianMatrix(const Matrix& m, double tol = kHermiticityTol);

  // Hermitian part (M + M^+)/2 without a contract check; used for results of
  // products that are Hermitian in exact arithmetic.
  static HermitianMatrix hermitian_part(const Matrix& m);
  static HermitianMatrix identity(Index d);
  static HermitianMatrix zero(Index d);
  static HermitianMatrix diagonal(const RealVector& diag);
  static HermitianMatrix projector(const Vector& v);  // |v><v|, v not normalised

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double c);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, double c) { return a *= c; }
  friend HermitianMatrix operator*(double c, HermitianMatrix a) { return a *= c; }

 private:
  struct Unchecked {};
  HermitianMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}
  Matrix m_;
};

bool is_hermitian(const Matrix& m, double tol = kHermiticityTol);

struct Spectrum {
  RealVector values;  // descending
  Matrix vectors;     // column k belongs to values[k]

  Index size() const { return values.size(); }
  double max() const { return values(0); }
  double min() const { return values(values.size() - 1); }
  Matrix reconstruct() const;
};

// Eigen-backed solver with deterministic output: descending eigenvalues, each
// eigenvector phase-fixed so its first non-negligible component is real positive,
// degenerate blocks sorted lexicographically by (re, im) of the components.
Spectrum eig_hermitian(const HermitianMatrix& m);
RealVector eigenvalues(const HermitianMatrix& m);

HermitianMatrix tensor(const HermitianMatrix& a, const HermitianMatrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

HermitianMatrix partial_trace(const HermitianMatrix& m, Dims dims, Subsystem keep);
HermitianMatrix partial_transpose(const HermitianMatrix& m, Dims dims, Subsystem side);
// Reorders a d_A x d_B operator into d_B x d_A ordering.
Matrix swap_subsystems(const Matrix& m, Dims dims);

// lambda -> lambda^r on the spectrum.  Integer r >= 1 is an ordinary power.
// r == 0 gives the support projector; fractional or negative r require PSD
// input and act only on eigenvalues above kRankCutoff * lambda_max.
HermitianMatrix matrix_power(const HermitianMatrix& m, double r, bool use_pseudoinverse = true);
HermitianMatrix matrix_power(const Spectrum& s, double r, bool use_pseudoinverse = true);

double operator_norm(const HermitianMatrix& m);
HermitianMatrix support_projector(const HermitianMatrix& m, double cutoff = kRankCutoff);
Index rank(const HermitianMatrix& m, double cutoff = kRankCutoff);

double psd_tolerance(double norm, double tol = kPsdTol);
bool is_psd(const HermitianMatrix& m, double tol = kPsdTol);

// Re Tr(A B) for Hermitian A, B without forming the product.
double trace_product(const Matrix& a, const Matrix& b);

}  // namespace posmap
