#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "posmap/errors.hpp"
#include "posmap/hermitian.hpp"
#include "posmap/states.hpp"

using namespace posmap;

namespace {

HermitianMatrix diag(std::initializer_list<double> v) {
  RealVector d(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) d(i++) = x;
  return HermitianMatrix::diagonal(d);
}

}  // namespace

TEST(HermitianMatrix, RejectsNonHermitianInput) {
  Matrix m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(HermitianMatrix{m}, ContractViolation);
  EXPECT_THROW(HermitianMatrix{Matrix(2, 3)}, ContractViolation);
}

TEST(HermitianMatrix, AcceptsRoundingLevelAsymmetry) {
  Matrix m(2, 2);
  m << 1, Complex(0.5, 1e-14), Complex(0.5, 0), 2;
  HermitianMatrix h(m);
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
}

TEST(EigHermitian, Examples) {
  auto s = eig_hermitian(HermitianMatrix::identity(2));
  EXPECT_DOUBLE_EQ(s.values(0), 1);
  EXPECT_DOUBLE_EQ(s.values(1), 1);

  s = eig_hermitian(diag({1, -1}));
  EXPECT_NEAR(s.values(0), 1, 1e-15);
  EXPECT_NEAR(s.values(1), -1, 1e-15);

  s = eig_hermitian(max_entangled_projector(2));
  EXPECT_NEAR(s.values(0), 1, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(s.values(k), 0, 1e-14);
}

TEST(EigHermitian, MatchesJacobiOracleAndReconstructs) {
  Rng rng(11);
  for (Index n : {1, 2, 3, 4, 7, 9, 16}) {
    for (int rep = 0; rep < 5; ++rep) {
      HermitianMatrix m = random_hermitian(n, rng);
      Spectrum s = eig_hermitian(m);
      auto ref = oracle::jacobi_eigenvalues(m.matrix());
      double scale = std::max(1.0, operator_norm(m));
      for (Index k = 0; k < n; ++k) EXPECT_NEAR(s.values(k), ref[static_cast<size_t>(k)], 1e-10 * scale);
      for (Index k = 0; k + 1 < n; ++k) EXPECT_GE(s.values(k), s.values(k + 1));
      EXPECT_LE(oracle::max_abs(s.reconstruct() - m.matrix()), 1e-10 * scale);
      EXPECT_LE(oracle::max_abs(s.vectors.adjoint() * s.vectors - Matrix::Identity(n, n)), 1e-10);
    }
  }
}

TEST(EigHermitian, DeterministicPhaseAndDegenerateOrder) {
  Rng rng(5);
  HermitianMatrix p = HermitianMatrix::hermitian_part(oracle::random_psd(6, 3, rng));
  HermitianMatrix m = support_projector(p);  // eigenvalues 1 (x3), 0 (x3)
  Spectrum a = eig_hermitian(m), b = eig_hermitian(m);
  EXPECT_EQ(oracle::max_abs(a.vectors - b.vectors), 0.0);
  for (Index k = 0; k < a.size(); ++k) {
    Index first = 0;
    while (std::abs(a.vectors(first, k)) <= 1e-8) ++first;
    EXPECT_NEAR(a.vectors(first, k).imag(), 0, 1e-15);
    EXPECT_GT(a.vectors(first, k).real(), 0);
  }
}

TEST(Tensor, Examples) {
  EXPECT_EQ(oracle::max_abs(tensor(HermitianMatrix::identity(2), HermitianMatrix::identity(2)).matrix() -
                            Matrix::Identity(4, 4)),
            0.0);
  HermitianMatrix t = tensor(diag({1, 0}), diag({0, 1}));
  EXPECT_EQ(oracle::max_abs(t.matrix() - diag({0, 1, 0, 0}).matrix()), 0.0);

  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    HermitianMatrix a = random_hermitian(3, rng), b = random_hermitian(4, rng);
    EXPECT_NEAR(tensor(a, b).trace(), a.trace() * b.trace(), 1e-12);
    EXPECT_LE(oracle::max_abs(tensor(a, b).matrix() - oracle::kron(a.matrix(), b.matrix())), 1e-15);
  }
}

TEST(PartialTrace, Examples) {
  Rng rng(7);
  HermitianMatrix sa = random_density(3, 2, rng), sb = random_density(2, 2, rng);
  HermitianMatrix prod = tensor(sa, sb);
  EXPECT_LE(oracle::max_abs(partial_trace(prod, {3, 2}, Subsystem::A).matrix() - sa.matrix()), 1e-14);
  EXPECT_LE(oracle::max_abs(partial_trace(prod, {3, 2}, Subsystem::B).matrix() - sb.matrix()), 1e-14);

  HermitianMatrix pa = partial_trace(max_entangled_projector(4), {4, 4}, Subsystem::A);
  EXPECT_LE(oracle::max_abs(pa.matrix() - Matrix::Identity(4, 4) / 4.0), 1e-15);

  BipartiteState zh = two_qubit_family(0.6, 0.3);
  HermitianMatrix ra = partial_trace(zh, Subsystem::A);
  Matrix ref = oracle::partial_trace(zh.matrix().matrix(), 2, 2, true);
  EXPECT_LE(oracle::max_abs(ra.matrix() - ref), 1e-15);
  EXPECT_NEAR(ra.trace(), 1.0, 1e-15);
  HermitianMatrix rb = partial_trace(zh, Subsystem::B);
  EXPECT_LE(oracle::max_abs(rb.matrix() - oracle::partial_trace(zh.matrix().matrix(), 2, 2, false)), 1e-15);

  EXPECT_THROW(partial_trace(prod, {2, 2}, Subsystem::A), DimensionMismatch);
}

TEST(PartialTrace, OfTensorIsScaledFactor) {
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    HermitianMatrix a = random_hermitian(3, rng), b = random_hermitian(4, rng);
    HermitianMatrix r = partial_trace(tensor(a, b), {3, 4}, Subsystem::A);
    EXPECT_LE(oracle::max_abs(r.matrix() - a.matrix() * b.trace()), 1e-12);
  }
}

TEST(PartialTranspose, Examples) {
  Rng rng(9);
  HermitianMatrix sa = random_density(2, 2, rng), sb = random_density(3, 2, rng);
  HermitianMatrix pt = partial_transpose(tensor(sa, sb), {2, 3}, Subsystem::B);
  EXPECT_LE(oracle::max_abs(pt.matrix() - oracle::kron(sa.matrix(), sb.matrix().transpose())), 1e-15);
  HermitianMatrix pta = partial_transpose(tensor(sa, sb), {2, 3}, Subsystem::A);
  EXPECT_LE(oracle::max_abs(pta.matrix() - oracle::kron(sa.matrix().transpose(), sb.matrix())), 1e-15);

  auto ev = oracle::jacobi_eigenvalues(partial_transpose(max_entangled_projector(2), {2, 2}, Subsystem::B).matrix());
  EXPECT_NEAR(ev[0], 0.5, 1e-12);
  EXPECT_NEAR(ev[1], 0.5, 1e-12);
  EXPECT_NEAR(ev[2], 0.5, 1e-12);
  EXPECT_NEAR(ev[3], -0.5, 1e-12);
}

TEST(PartialTranspose, InvolutionTracePreservingMatchesOracle) {
  Rng rng(10);
  for (int rep = 0; rep < 20; ++rep) {
    HermitianMatrix r = random_density(12, 5, rng);
    Dims dims{3, 4};
    HermitianMatrix t = partial_transpose(r, dims, Subsystem::B);
    EXPECT_LE(oracle::max_abs(t.matrix() - oracle::partial_transpose_b(r.matrix(), 3, 4)), 1e-15);
    EXPECT_LE(oracle::max_abs(partial_transpose(t, dims, Subsystem::B).matrix() - r.matrix()), 1e-15);
    EXPECT_LE(oracle::max_abs(partial_transpose(partial_transpose(r, dims, Subsystem::A), dims, Subsystem::A).matrix() -
                              r.matrix()),
              1e-15);
    EXPECT_NEAR(t.trace(), r.trace(), 1e-14);
    EXPECT_TRUE(is_hermitian(t.matrix()));
  }
}

TEST(MatrixPower, Examples) {
  HermitianMatrix s = matrix_power(diag({4, 1}), 0.5);
  EXPECT_LE(oracle::max_abs(s.matrix() - diag({2, 1}).matrix()), 1e-15);
  HermitianMatrix inv = matrix_power(diag({2, 0}), -1, true);
  EXPECT_LE(oracle::max_abs(inv.matrix() - diag({0.5, 0}).matrix()), 1e-15);
  EXPECT_THROW(matrix_power(diag({2, 0}), -1, false), DomainError);
  EXPECT_THROW(matrix_power(diag({1, -0.5}), 0.5), DomainError);
  HermitianMatrix p0 = matrix_power(diag({3, 0, 1e-20}), 0);
  EXPECT_LE(oracle::max_abs(p0.matrix() - diag({1, 0, 0}).matrix()), 1e-15);
}

TEST(MatrixPower, SemigroupOnSupport) {
  Rng rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    HermitianMatrix m = HermitianMatrix::hermitian_part(oracle::random_psd(6, 4, rng));
    const double a = 0.3 + rng.uniform() * 2, b = 0.1 + rng.uniform() * 2;
    Matrix lhs = matrix_power(m, a).matrix() * matrix_power(m, b).matrix();
    EXPECT_LE(oracle::max_abs(lhs - matrix_power(m, a + b).matrix()), 1e-10 * std::pow(operator_norm(m), a + b));
  }
}

TEST(MatrixPower, IntegerPowersMatchRepeatedProducts) {
  Rng rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    HermitianMatrix m = random_hermitian(5, rng);
    Matrix acc = Matrix::Identity(5, 5);
    for (int r = 1; r <= 4; ++r) {
      acc = acc * m.matrix();
      EXPECT_LE(oracle::max_abs(matrix_power(m, r).matrix() - acc), 1e-10 * std::max(1.0, oracle::max_abs(acc)));
    }
  }
}

TEST(OperatorNorm, ExamplesAndTriangleInequality) {
  EXPECT_DOUBLE_EQ(operator_norm(HermitianMatrix::identity(5)), 1.0);
  EXPECT_NEAR(operator_norm(diag({0.2, -0.7})), 0.7, 1e-15);
  EXPECT_NEAR(operator_norm(isotropic_state(4, 1.0).matrix()), 1.0, 1e-14);
  Rng rng(14);
  for (int rep = 0; rep < 50; ++rep) {
    HermitianMatrix a = random_hermitian(6, rng), b = random_hermitian(6, rng);
    EXPECT_LE(operator_norm(a + b), operator_norm(a) + operator_norm(b) + 1e-12);
  }
}

TEST(SupportProjector, Examples) {
  EXPECT_EQ(oracle::max_abs(support_projector(diag({1, 0})).matrix() - diag({1, 0}).matrix()), 0.0);
  EXPECT_LE(oracle::max_abs(support_projector(HermitianMatrix::identity(3)).matrix() - Matrix::Identity(3, 3)), 1e-15);
  Rng rng(15);
  for (Index r = 1; r <= 5; ++r) {
    HermitianMatrix m = HermitianMatrix::hermitian_part(oracle::random_psd(7, r, rng));
    HermitianMatrix p = support_projector(m);
    EXPECT_NEAR(p.trace(), static_cast<double>(r), 1e-10);
    EXPECT_LE(oracle::max_abs(p.matrix() * p.matrix() - p.matrix()), 1e-10);
    EXPECT_EQ(rank(m), r);
  }
}

TEST(IsPsd, UsesRelativeTolerance) {
  EXPECT_TRUE(is_psd(diag({1, -1e-10})));
  EXPECT_FALSE(is_psd(diag({1, -1e-6})));
  EXPECT_TRUE(is_psd(diag({1e6, -1e-4})));
}
