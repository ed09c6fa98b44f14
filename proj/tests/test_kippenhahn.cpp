#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "kipp/generators.hpp"
#include "kipp/kippenhahn.hpp"
#include "kipp/linalg.hpp"

using namespace kipp;

namespace {

HomoPoly3 z_pow(int n) { return HomoPoly3::monomial(0, 0, n); }

// Dense eigensolve of Re(e^{-i theta} A) on a fine grid; independent of support_function.
double dense_support(const ComplexMatrix& a, double theta) {
  const ComplexMatrix r = (std::polar(1.0, -theta) * a + (std::polar(1.0, -theta) * a).adjoint()) / 2.0;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(r);
  double best = -1e300;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) best = std::max(best, es.eigenvalues()(i).real());
  return best;
}

}  // namespace

TEST(KippPolyDet, JordanTwo) {
  const HomoPoly3 p = kipp_poly_det(jordan_shift(2));
  const HomoPoly3 expected = z_pow(2) - 0.25 * HomoPoly3::monomial(2, 0, 0) - 0.25 * HomoPoly3::monomial(0, 2, 0);
  EXPECT_LT(relative_difference(p, expected), 1e-12);
}

TEST(KippPolyDet, DiagonalIsProductOfLinearForms) {
  const std::vector<Complex> lam{Complex(1, 0), Complex(0, 1), Complex(-0.5, 0.25)};
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  HomoPoly3 expected = HomoPoly3::constant(1.0);
  for (int i = 0; i < 3; ++i) {
    d(i, i) = lam[static_cast<std::size_t>(i)];
    expected = expected * HomoPoly3::linear(lam[static_cast<std::size_t>(i)].real(),
                                            lam[static_cast<std::size_t>(i)].imag(), 1.0);
  }
  EXPECT_LT(relative_difference(kipp_poly_det(d), expected), 1e-12);
}

TEST(KippPolyDet, ZeroMatrixAndLimits) {
  EXPECT_LT(relative_difference(kipp_poly_det(ComplexMatrix::Zero(4, 4)), z_pow(4)), 1e-13);
  EXPECT_THROW(kipp_poly_det(ComplexMatrix::Zero(13, 13)), BadDims);
  EXPECT_THROW(kipp_poly_det(ComplexMatrix::Zero(2, 3)), NotSquare);
}

TEST(KippPolyDet, MatchesPointwiseDeterminant) {
  const ComplexMatrix a = random_matrix(5, {21});
  const auto [h, k] = hermitian_parts(a);
  const HomoPoly3 p = kipp_poly_det(a);
  for (const auto& v : {Eigen::Vector3d(0.3, -1.2, 0.8), Eigen::Vector3d(2.0, 0.5, -0.1)}) {
    const ComplexMatrix m = v(0) * h + v(1) * k + v(2) * ComplexMatrix::Identity(5, 5);
    EXPECT_NEAR(p(v(0), v(1), v(2)), m.determinant().real(), 1e-11);
  }
}

TEST(KippPolyExpanded, MatchesDeterminantOnRandomTriangular) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const ComplexMatrix t = random_upper_triangular(5, derive_seed({100}, s));
    EXPECT_LT(relative_difference(kipp_poly_expanded(t), kipp_poly_det(t)), 1e-9) << "seed index " << s;
  }
}

TEST(KippPolyExpanded, SchurFormOfDenseMatrix) {
  const ComplexMatrix a = random_matrix(5, {22});
  const ComplexMatrix t = schur_triangularize(a).triangular;
  EXPECT_LT(relative_difference(kipp_poly_expanded(t), kipp_poly_det(a)), 1e-9);
}

TEST(KippPolyExpanded, Preconditions) {
  EXPECT_THROW(kipp_poly_expanded(ComplexMatrix::Zero(4, 4)), NotDim5);
  ComplexMatrix lower = ComplexMatrix::Zero(5, 5);
  lower(3, 1) = 0.5;
  EXPECT_THROW(kipp_poly_expanded(lower), NotUpperTriangular);
}

TEST(KippPolyDet, UnitaryInvariance) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const ComplexMatrix a = random_matrix(5, derive_seed({23}, s));
    const ComplexMatrix u = haar_unitary(5, derive_seed({24}, s));
    EXPECT_LT(relative_difference(kipp_poly_det(u.adjoint() * a * u), kipp_poly_det(a)), 1e-9);
  }
}

TEST(KippPolyDet, RotationAndTranslationCovariance) {
  const ComplexMatrix a = random_matrix(5, {25});
  const HomoPoly3 p = kipp_poly_det(a);
  const double phi = 0.9;
  Eigen::Matrix3d rot;
  rot << std::cos(phi), std::sin(phi), 0, -std::sin(phi), std::cos(phi), 0, 0, 0, 1;
  EXPECT_LT(relative_difference(kipp_poly_det(std::polar(1.0, phi) * a), p.substitute(rot)), 1e-9);

  const Complex c(0.4, -0.7);
  Eigen::Matrix3d shift;
  shift << 1, 0, 0, 0, 1, 0, c.real(), c.imag(), 1;
  EXPECT_LT(relative_difference(kipp_poly_det(a + c * ComplexMatrix::Identity(5, 5)), p.substitute(shift)), 1e-9);
}

TEST(SupportFunction, JordanBlocksAreDiscs) {
  for (double theta : {0.0, 0.4, 2.0, 5.5}) {
    EXPECT_NEAR(support_function(jordan_shift(2), theta), 0.5, 1e-14);
    EXPECT_NEAR(support_function(jordan_shift(5), theta), std::cos(kPi / 6.0), 1e-13);
  }
}

TEST(SupportFunction, AgreesWithDenseSolver) {
  const ComplexMatrix a = random_matrix(6, {26});
  for (int k = 0; k < 16; ++k) {
    const double theta = 2.0 * kPi * k / 16.0;
    EXPECT_NEAR(support_function(a, theta), dense_support(a, theta), 1e-12);
  }
}

TEST(Boundary, PointsAttainTheSupportFunction) {
  const ComplexMatrix a = random_matrix(4, {27});
  const int n = 32;
  const auto pts = boundary_polyline(a, n);
  ASSERT_EQ(pts.size(), static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * k / n;
    EXPECT_NEAR((std::polar(1.0, -theta) * pts[static_cast<std::size_t>(k)]).real(), support_function(a, theta),
                1e-12);
  }
  EXPECT_THROW(boundary_polyline(a, 7), std::invalid_argument);
}

TEST(SpectralSlice, CurvePointsAndDegeneracy) {
  const ComplexMatrix a = random_matrix(4, {28});
  const SpectralSlice s = spectral_slice(a, 1.1);
  for (int j = 0; j + 1 < 4; ++j) EXPECT_LE(s.eigenvalues(j), s.eigenvalues(j + 1));
  for (int j = 0; j < 4; ++j) {
    // The tangent line at angle theta passes through the curve point.
    EXPECT_NEAR((std::polar(1.0, -1.1) * s.curve_points(j)).real(), s.eigenvalues(j), 1e-12);
  }
  EXPECT_FALSE(s.degenerate);
  EXPECT_TRUE(spectral_slice(ComplexMatrix::Identity(3, 3), 0.3).degenerate);
  EXPECT_EQ(curve_points(a, 10).size(), 10u);
}
