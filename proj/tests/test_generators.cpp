#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "kipp/generators.hpp"
#include "kipp/linalg.hpp"

using namespace kipp;

TEST(Seeds, DeterministicAndDistinct) {
  EXPECT_EQ(derive_seed({5}, 3).value, derive_seed({5}, 3).value);
  EXPECT_NE(derive_seed({5}, 3).value, derive_seed({5}, 4).value);
  EXPECT_NE(derive_seed({5}, 3).value, derive_seed({6}, 3).value);
  EXPECT_EQ(random_matrix(4, {7}), random_matrix(4, {7}));
}

TEST(Haar, IsUnitary) {
  const ComplexMatrix u = haar_unitary(6, {1});
  EXPECT_LT((u.adjoint() * u - ComplexMatrix::Identity(6, 6)).norm(), 1e-13);
  EXPECT_THROW(haar_unitary(0, {1}), BadDims);
}

TEST(Jordan, ShiftAndSums) {
  const ComplexMatrix j = jordan_shift(3);
  EXPECT_EQ(j(0, 1), Complex(1.0));
  EXPECT_EQ(j(1, 2), Complex(1.0));
  EXPECT_EQ(j.cwiseAbs().sum(), 2.0);
  EXPECT_THROW(jordan_shift(1), BadDims);
  EXPECT_EQ(direct_sum(j, jordan_shift(2)).rows(), 5);
}

TEST(TwoEllipseBlock, Layout) {
  const std::array<Complex, 5> l{1.0, 2.0, 3.0, 4.0, 5.0};
  const ComplexMatrix t = two_ellipse_block(l, 0.5, 0.25);
  EXPECT_EQ(t(0, 1), Complex(0.5));
  EXPECT_EQ(t(2, 3), Complex(0.25));
  EXPECT_EQ(t(1, 2), Complex(0.0));
  EXPECT_TRUE(is_upper_triangular(t));
  EXPECT_THROW(two_ellipse_block(l, -1.0, 0.0), std::invalid_argument);
}

TEST(S5Family, AllZeroIsJordanFive) {
  EXPECT_EQ(s5_family(0.0, 0.0, 0.0), jordan_shift(5));
}

TEST(S5Family, ClassAndSpectrum) {
  const ComplexMatrix m = s5_family(0.3, Complex(0.5, 0.1), -0.2);
  EXPECT_TRUE(is_class_Sn(m, 1e-10));
  EXPECT_TRUE(is_upper_triangular(m));
  EXPECT_EQ(m(0, 0), Complex(0.3));
  EXPECT_EQ(m(2, 2), Complex(0.0));
  EXPECT_EQ(m(3, 3), Complex(0.5, 0.1));
  // a = 0 gives a partial isometry.
  EXPECT_TRUE(is_partial_isometry(s5_family(0.0, Complex(0.4, -0.3), 0.6), 1e-13));
  EXPECT_THROW(s5_family(1.0, 0.0, 0.0), ParameterOutOfDisc);
  EXPECT_THROW(s5_family(0.1, 1.2, 0.0), ParameterOutOfDisc);
}

TEST(Flat3x3, RankOneRealPart) {
  const double theta = 0.7, mu = 0.9;
  const ComplexMatrix c = flat_3x3(Complex(0.1, 0.2), Complex(-0.3, 0.1), Complex(0.2, -0.4), theta, mu, 0.5, -1.0);
  const ComplexMatrix r = rotated_real_part(c, theta) + mu * ComplexMatrix::Identity(3, 3);
  const RealVector sv = singular_values(r);
  EXPECT_LT(sv(1), 1e-12);
  EXPECT_GT(sv(0), 0.1);
  EXPECT_THROW(flat_3x3(0.0, 0.0, 0.0, 0.0, -0.1), InfeasibleMu);
}

TEST(PartialIsometry, KernelAndDeterminism) {
  for (int m = 0; m <= 5; ++m) {
    const ComplexMatrix a = random_partial_isometry(5, m, {50});
    EXPECT_TRUE(is_partial_isometry(a, 1e-12));
    EXPECT_EQ(kernel_dimension(a, 1e-10), m);
  }
  EXPECT_EQ(random_partial_isometry(5, 2, {7}), random_partial_isometry(5, 2, {7}));
  EXPECT_THROW(random_partial_isometry(5, 6, {7}), BadDims);
}

TEST(Ker2Family, PatternAndConstraints) {
  for (bool eq : {false, true}) {
    const ComplexMatrix a = ker2_family({51}, eq);
    EXPECT_TRUE(is_partial_isometry(a, 1e-12));
    EXPECT_EQ(kernel_dimension(a, 1e-10), 2);
    const Ker2Entries e = Ker2Entries::from_matrix(a);
    EXPECT_EQ(e.matrix(), a);
    EXPECT_GE(e.a, 0.2);
    EXPECT_LE(e.a, 0.8);
    if (eq) EXPECT_EQ(e.b, Complex(e.a));
    // Orthogonality relations among the columns of [B; C].
    const auto cj = [](Complex z) { return std::conj(z); };
    EXPECT_LT(std::abs(e.k * cj(e.t) + e.g * cj(e.j) + e.b * cj(e.f)), 1e-14);
    EXPECT_LT(std::abs(e.l * cj(e.t) + e.h * cj(e.j) + e.e * cj(e.f) + e.a * cj(e.d)), 1e-14);
    EXPECT_LT(std::abs(e.k * cj(e.l) + e.g * cj(e.h) + e.b * cj(e.e)), 1e-14);
  }
}

TEST(RandomUpperTriangular, EntriesInDisc) {
  const ComplexMatrix t = random_upper_triangular(5, {52}, 2.0);
  EXPECT_TRUE(is_upper_triangular(t));
  EXPECT_LE(t.cwiseAbs().maxCoeff(), 2.0);
}
