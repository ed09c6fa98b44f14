#include <gtest/gtest.h>

#include <algorithm>

#include "kipp/classify.hpp"
#include "kipp/generators.hpp"
#include "kipp/kippenhahn.hpp"

using namespace kipp;
using Kind = CurveComponent::Kind;

namespace {

double angle_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

std::vector<Kind> kinds(const std::vector<CurveComponent>& cs) {
  std::vector<Kind> out;
  for (const auto& c : cs) out.push_back(c.kind);
  return out;
}

}  // namespace

TEST(FitDisc, JordanBlocks) {
  const DiscFit j2 = fit_disc(jordan_shift(2), 64);
  EXPECT_LT(std::abs(j2.center), 1e-12);
  EXPECT_NEAR(j2.radius, 0.5, 1e-12);
  EXPECT_TRUE(is_circular(j2));

  const DiscFit j5 = fit_disc(jordan_shift(5), 256);
  EXPECT_LT(std::abs(j5.center), 1e-10);
  EXPECT_NEAR(j5.radius, std::sqrt(3.0) / 2.0, 1e-10);
  EXPECT_TRUE(is_circular(j5));
}

TEST(FitDisc, SegmentIsNotCircular) {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  const DiscFit f = fit_disc(d, 128);
  EXPECT_GT(f.residual, 0.05);
  EXPECT_FALSE(is_circular(f));
  EXPECT_FALSE(is_circular(fit_disc(ComplexMatrix::Zero(3, 3), 64)));
  EXPECT_THROW(fit_disc(d, 15), BadDims);
}

TEST(FitDisc, Equivariance) {
  const ComplexMatrix a = random_matrix(5, {31});
  const DiscFit base = fit_disc(a, 512);
  const Complex c(0.3, -1.1), w = std::polar(1.7, 0.6);
  const DiscFit moved = fit_disc(w * a + c * ComplexMatrix::Identity(5, 5), 512);
  EXPECT_LT(std::abs(moved.center - (w * base.center + c)), 1e-9);
  EXPECT_NEAR(moved.radius, std::abs(w) * base.radius, 1e-9);
  EXPECT_NEAR(moved.residual, std::abs(w) * base.residual, 1e-9);
}

TEST(Division, LinearFactorDividesExactly) {
  const HomoPoly3 q = ellipse_quadratic(Complex(0.2, 0.1), Complex(-0.3, 0.4), 0.8);
  const HomoPoly3 p = q * linear_factor(Complex(0.5, -0.5));
  const Division d = divide_linear(p, Complex(0.5, -0.5));
  EXPECT_LT(d.residual_norm, 1e-14);
  EXPECT_LT(relative_difference(d.quotient, q), 1e-14);
  EXPECT_GT(divide_linear(p, Complex(0.1, 0.1)).residual_norm, 1e-3);
}

TEST(EllipseFactor, RecoversMinorAxis) {
  const Complex l1(0.2, 0.1), l2(-0.3, 0.4);
  const HomoPoly3 rest = linear_factor(Complex(0.6, 0.0)) * ellipse_quadratic(Complex(0.0, -0.5), 0.1, 0.3);
  const HomoPoly3 p = ellipse_quadratic(l1, l2, 0.8) * rest;
  const EllipseFactor e = fit_ellipse_factor(p, l1, l2);
  EXPECT_NEAR(e.minor_axis, 0.8, 1e-10);
  EXPECT_LT(e.residual_norm, 1e-12);
  EXPECT_LT(relative_difference(e.quotient, rest), 1e-10);
}

TEST(EllipseFactor, NegativeSquareThrows) {
  const Complex l1(0.2, 0.0), l2(-0.3, 0.0);
  const HomoPoly3 n = HomoPoly3::monomial(2, 0, 0) + HomoPoly3::monomial(0, 2, 0);
  const HomoPoly3 p = (linear_factor(l1) * linear_factor(l2) + 0.5 * n) * linear_factor(0.0);
  EXPECT_THROW(fit_ellipse_factor(p, l1, l2), NegativeMinorAxisSquared);
}

TEST(DetectFlat, RecoversPlantedLine) {
  const ComplexMatrix c = flat_3x3(0.2, Complex(0.1, 0.3), Complex(-0.1, -0.2), 0.0, 0.5);
  const auto found = detect_flat(c);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_LT(angle_gap(found[0].theta, 0.0), 1e-6);
  EXPECT_NEAR(found[0].mu, 0.5, 1e-6);
}

TEST(DetectFlat, DiagonalHasThreeCollisions) {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = kI;
  d(2, 2) = -1.0;
  const auto found = detect_flat(d);
  ASSERT_EQ(found.size(), 3u);
  EXPECT_LT(angle_gap(found[0].theta, kPi / 2.0), 1e-6);
  EXPECT_NEAR(found[0].mu, 0.0, 1e-6);
  EXPECT_LT(angle_gap(found[1].theta, 5.0 * kPi / 4.0), 1e-6);
  EXPECT_NEAR(found[1].mu, std::sqrt(0.5), 1e-6);
  EXPECT_LT(angle_gap(found[2].theta, 7.0 * kPi / 4.0), 1e-6);
  EXPECT_NEAR(found[2].mu, std::sqrt(0.5), 1e-6);
}

TEST(DetectFlat, GenericMatrixHasNone) { EXPECT_TRUE(detect_flat(random_matrix(4, {32})).empty()); }

TEST(ClassifyCurve, TwoEllipsesAndPoint) {
  const std::array<Complex, 5> l{Complex(0.5, 0.2), Complex(-0.4, 0.1), Complex(0.1, -0.6), Complex(0.3, 0.5),
                                 Complex(-0.2, -0.3)};
  const auto cs = classify_curve(two_ellipse_block(l, 0.9, 0.4));
  ASSERT_EQ(kinds(cs), (std::vector<Kind>{Kind::Point, Kind::Ellipse, Kind::Ellipse}));
  EXPECT_LT(std::abs(cs[0].foci[0] - l[4]), 1e-10);
  // Ellipses are sorted by foci: (-0.4+0.1i, 0.5+0.2i) before (0.1-0.6i, 0.3+0.5i).
  EXPECT_LT(std::abs(cs[1].foci[0] - l[1]) + std::abs(cs[1].foci[1] - l[0]), 1e-9);
  EXPECT_NEAR(cs[1].minor_axis, 0.9, 1e-9);
  EXPECT_LT(std::abs(cs[2].foci[0] - l[2]) + std::abs(cs[2].foci[1] - l[3]), 1e-9);
  EXPECT_NEAR(cs[2].minor_axis, 0.4, 1e-9);
}

TEST(ClassifyCurve, DiagonalGivesFivePoints) {
  ComplexMatrix d = ComplexMatrix::Zero(5, 5);
  for (int i = 0; i < 5; ++i) d(i, i) = std::polar(0.5, 1.3 * i);
  const auto cs = classify_curve(d);
  EXPECT_EQ(kinds(cs), std::vector<Kind>(5, Kind::Point));
}

TEST(ClassifyCurve, JordanFive) {
  const auto cs = classify_curve(jordan_shift(5));
  ASSERT_EQ(kinds(cs), (std::vector<Kind>{Kind::Point, Kind::Ellipse, Kind::Ellipse}));
  EXPECT_NEAR(cs[1].minor_axis, std::sqrt(3.0), 1e-8);
  EXPECT_NEAR(cs[2].minor_axis, 1.0, 1e-8);
}

TEST(ClassifyCurve, EllipseAndFlatQuartic) {
  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(0, 0) = Complex(0.9, 0.1);
  e(1, 1) = Complex(-0.8, 0.3);
  e(0, 1) = 0.7;
  const ComplexMatrix a =
      direct_sum(e, flat_3x3(0.2, Complex(0.1, 0.3), Complex(-0.1, -0.2), 0.4, 0.5, 0.3, 1.1));
  const ComplexMatrix u = haar_unitary(5, {33});
  for (const ComplexMatrix& m : {a, ComplexMatrix(u * a * u.adjoint())}) {
    const auto cs = classify_curve(m);
    ASSERT_EQ(kinds(cs), (std::vector<Kind>{Kind::Ellipse, Kind::QuarticFlat}));
    EXPECT_NEAR(cs[0].minor_axis, 0.7, 1e-8);
    EXPECT_LT(angle_gap(cs[1].theta, 0.4), 1e-6);
    EXPECT_NEAR(cs[1].mu, 0.5, 1e-6);
  }
}

TEST(ClassifyCurve, RejectsOtherSizes) { EXPECT_THROW(classify_curve(jordan_shift(4)), NotDim5); }

TEST(ClassifyCurve, ConjugatedNilpotentUsesClusterMeans) {
  // The 5-fold zero eigenvalue of U J5 U* is only resolved to about eps^(1/5);
  // the classification falls back to cluster means.
  const ComplexMatrix u = haar_unitary(5, {34});
  const auto cs = classify_curve(u * jordan_shift(5) * u.adjoint());
  ASSERT_EQ(kinds(cs), (std::vector<Kind>{Kind::Point, Kind::Ellipse, Kind::Ellipse}));
  for (const auto& c : cs) {
    for (Complex f : c.foci) EXPECT_LT(std::abs(f), 1e-10);
  }
  EXPECT_NEAR(cs[1].minor_axis, std::sqrt(3.0), 1e-7);
  EXPECT_NEAR(cs[2].minor_axis, 1.0, 1e-7);
}
