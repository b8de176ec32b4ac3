#include "posmap/states.hpp"

#include <cmath>
#include <string>

#include "posmap/errors.hpp"

namespace posmap {

BipartiteState::BipartiteState(HermitianMatrix rho, Dims dims, double psd_tol)
    : rho_(std::move(rho)), dims_(dims) {
  if (dims_.a < 1 || dims_.b < 1 || rho_.dim() != dims_.total())
    throw DimensionMismatch("BipartiteState: matrix dimension does not match dA*dB");
  if (std::abs(rho_.trace() - 1.0) > 1e-12)
    throw ContractViolation("BipartiteState: trace " + std::to_string(rho_.trace()) + " is not 1");
  if (!is_psd(rho_, psd_tol)) throw ContractViolation("BipartiteState: matrix is not positive semidefinite");
}

HermitianMatrix partial_trace(const BipartiteState& rho, Subsystem keep) { return rho.reduced(keep); }

HermitianMatrix partial_transpose(const BipartiteState& rho, Subsystem side) {
  return rho.partial_transpose(side);
}

namespace {

double factorial(int n) {
  if (n < 0) return 0;
  return std::tgamma(static_cast<double>(n) + 1.0);
}

int twice(double j, const char* what) {
  const double t = 2 * j;
  const auto r = std::lround(t);
  if (j < 0 || std::abs(t - static_cast<double>(r)) > 1e-12)
    throw ContractViolation(std::string(what) + " must be a non-negative half-integer");
  return static_cast<int>(r);
}

}  // namespace

double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  if (tm1 + tm2 != tM) return 0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ) return 0;
  if ((tj1 + tm1) % 2 || (tj2 + tm2) % 2 || (tJ + tM) % 2) return 0;
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2 || (tj1 + tj2 + tJ) % 2) return 0;
  // Racah's closed form with all half-integers carried as twice their value.
  const int a = (tJ + tj1 - tj2) / 2, b = (tJ - tj1 + tj2) / 2, c = (tj1 + tj2 - tJ) / 2;
  const int e = (tj1 + tj2 + tJ) / 2 + 1;
  double pre = std::sqrt((tJ + 1) * factorial(a) * factorial(b) * factorial(c) / factorial(e));
  pre *= std::sqrt(factorial((tJ + tM) / 2) * factorial((tJ - tM) / 2) * factorial((tj1 - tm1) / 2) *
                   factorial((tj1 + tm1) / 2) * factorial((tj2 - tm2) / 2) * factorial((tj2 + tm2) / 2));
  double sum = 0;
  for (int k = 0; k <= tj1 + tj2 + tJ; ++k) {
    const int d1 = c - k, d2 = (tj1 - tm1) / 2 - k, d3 = (tj2 + tm2) / 2 - k;
    const int d4 = (tJ - tj2 + tm1) / 2 + k, d5 = (tJ - tj1 - tm2) / 2 + k;
    if (d1 < 0 || d2 < 0 || d3 < 0 || d4 < 0 || d5 < 0) continue;
    const double term = 1.0 / (factorial(k) * factorial(d1) * factorial(d2) * factorial(d3) * factorial(d4) *
                               factorial(d5));
    sum += (k % 2 ? -term : term);
  }
  return pre * sum;
}

AngularMomentumProjectors angular_momentum_projectors(double j1, double j2) {
  const int tj1 = twice(j1, "j1"), tj2 = twice(j2, "j2");
  const Index n1 = tj1 + 1, n2 = tj2 + 1;
  AngularMomentumProjectors out;
  out.j1 = j1;
  out.j2 = j2;
  for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
    Matrix p = Matrix::Zero(n1 * n2, n1 * n2);
    for (int tM = -tJ; tM <= tJ; tM += 2) {
      Vector v = Vector::Zero(n1 * n2);
      for (Index i1 = 0; i1 < n1; ++i1)
        for (Index i2 = 0; i2 < n2; ++i2) {
          const int tm1 = tj1 - 2 * static_cast<int>(i1), tm2 = tj2 - 2 * static_cast<int>(i2);
          v(i1 * n2 + i2) = clebsch_gordan(tj1, tm1, tj2, tm2, tJ, tM);
        }
      p += v * v.adjoint();
    }
    out.total_j.push_back(tJ / 2.0);
    out.projectors.push_back(HermitianMatrix::hermitian_part(p));
  }
  return out;
}

namespace {

const AngularMomentumProjectors& spin32_projectors() {
  static const AngularMomentumProjectors p = angular_momentum_projectors(1.5, 1.5);
  return p;
}

}  // namespace

BipartiteState rot_invariant_state(double p, double q, double r, double s) {
  const double w[4] = {p, q, r, s};
  for (double x : w)
    if (x < 0 || !std::isfinite(x)) throw ContractViolation("rot_invariant_state: weights must be non-negative");
  if (std::abs(p + q + r + s - 1.0) > 1e-12) throw ContractViolation("rot_invariant_state: weights must sum to 1");
  const auto& pj = spin32_projectors();
  Matrix m = Matrix::Zero(16, 16);
  for (int J = 0; J < 4; ++J) m += (w[J] / (2 * J + 1)) * pj.projectors[static_cast<size_t>(J)].matrix();
  // renormalise away the simplex rounding allowed above
  m /= m.trace().real();
  return BipartiteState(HermitianMatrix::hermitian_part(m), Dims{4, 4});
}

HermitianMatrix max_entangled_projector(Index d) {
  if (d < 1) throw ContractViolation("max_entangled_projector: d must be positive");
  Vector v = Vector::Zero(d * d);
  for (Index i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return HermitianMatrix::projector(v);
}

BipartiteState isotropic_state(Index d, double p) {
  const double dd = static_cast<double>(d);
  if (d < 2 || !(p >= -1.0 / (dd * dd - 1) - 1e-15 && p <= 1.0))
    throw ContractViolation("isotropic_state: p outside [-1/(d^2-1), 1]");
  HermitianMatrix m = max_entangled_projector(d) * p + HermitianMatrix::identity(d * d) * ((1 - p) / (dd * dd));
  return BipartiteState(m, Dims{d, d});
}

BipartiteState two_qubit_family(double a, double q) {
  if (!(a >= 0 && a <= 1 && q >= 0 && q <= 1)) throw ContractViolation("two_qubit_family: a, q must lie in [0, 1]");
  const double b = std::sqrt(1 - a * a);
  Vector psi1 = Vector::Zero(4), psi2 = Vector::Zero(4);
  psi1(0) = a;  // |00>
  psi1(3) = b;  // |11>
  psi2(2) = a;  // |10>
  psi2(1) = b;  // |01>
  HermitianMatrix m = HermitianMatrix::projector(psi1) * q + HermitianMatrix::projector(psi2) * (1 - q);
  return BipartiteState(m, Dims{2, 2});
}

BipartiteState random_separable(Index da, Index db, int terms, Rng& rng) {
  if (terms < 1) throw ContractViolation("random_separable: terms must be >= 1");
  auto w = random_simplex(static_cast<size_t>(terms), rng);
  Matrix m = Matrix::Zero(da * db, da * db);
  for (int t = 0; t < terms; ++t) {
    Vector a = haar_pure_state(da, rng);
    Vector b = haar_pure_state(db, rng);
    Vector ab = kron(a, b);
    m += w[static_cast<size_t>(t)] * ab * ab.adjoint();
  }
  m /= m.trace().real();
  return BipartiteState(HermitianMatrix::hermitian_part(m), Dims{da, db});
}

BipartiteState random_separable(Index da, Index db, int terms, std::uint64_t seed) {
  Rng rng(seed);
  return random_separable(da, db, terms, rng);
}

BipartiteState random_rot_invariant(Rng& rng) {
  auto w = random_simplex(4, rng);
  return rot_invariant_state(w[0], w[1], w[2], w[3]);
}

BipartiteState product_state(const HermitianMatrix& a, const HermitianMatrix& b) {
  return BipartiteState(tensor(a, b), Dims{a.dim(), b.dim()});
}

}  // namespace posmap
