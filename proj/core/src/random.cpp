#include "posmap/random.hpp"

#include <cmath>
#include <numbers>

#include "posmap/errors.hpp"

namespace posmap {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(make_engine(seed, stream)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0;
  while (u1 == 0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::sqrt(0.5);
}

Matrix random_ginibre(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

Vector haar_pure_state(Index d, Rng& rng) {
  Vector v = random_ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

Matrix haar_unitary(Index d, Rng& rng) {
  Matrix g = random_ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < d; ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

std::vector<double> random_simplex(size_t n, Rng& rng) {
  std::vector<double> w(n);
  double s = 0;
  for (auto& x : w) {
    double u = 0;
    while (u == 0) u = rng.uniform();
    x = -std::log(u);
    s += x;
  }
  for (auto& x : w) x /= s;
  return w;
}

HermitianMatrix random_density(Index d, Index rank, Rng& rng) {
  if (rank < 1 || rank > d) throw ContractViolation("random_density: rank must be in [1, d]");
  Matrix g = random_ginibre(d, rank, rng);
  Matrix m = g * g.adjoint();
  return HermitianMatrix::hermitian_part(m / m.trace().real());
}

HermitianMatrix random_hermitian(Index d, Rng& rng) {
  return HermitianMatrix::hermitian_part(random_ginibre(d, d, rng));
}

}  // namespace posmap
