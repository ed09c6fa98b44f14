#pragma once

#include <vector>

#include "kipp/homogeneous_polynomial.hpp"
#include "kipp/types.hpp"

namespace kipp {

inline constexpr int kMaxPolyDim = 12;

/// det(x Re(A) + y Im(A) + z I), recovered from determinant samples on a
/// grid of scaled roots of unity; normalized monic in z.
/// Throws IllConditionedInterpolation when the fit does not reproduce the
/// samples to 1e-8 relative.
HomoPoly3 kipp_poly_det(const ComplexMatrix& a);

/// The closed-form expansion of the Kippenhahn polynomial of a 5x5 upper
/// triangular matrix, assembled term family by term family. Independent of
/// kipp_poly_det; the two are cross-checked in the test suite.
HomoPoly3 kipp_poly_expanded(const ComplexMatrix& t);

/// The cubic Q with p_T = prod(alpha_i x + beta_i y + z) - (x^2 + y^2)/4 Q.
HomoPoly3 kipp_q_expanded(const ComplexMatrix& t);

/// Largest eigenvalue of Re(e^{-i theta} A).
double support_function(const ComplexMatrix& a, double theta);

inline constexpr double kDegenerateGap = 1e-7;

struct SpectralSlice {
  double theta = 0.0;
  RealVector eigenvalues;        // ascending
  ComplexMatrix eigenvectors;    // unit columns
  ComplexVector curve_points;    // <H u, u> + i <K u, u>
  bool degenerate = false;       // two eigenvalues closer than kDegenerateGap
};

SpectralSlice spectral_slice(const ComplexMatrix& a, double theta);

/// Points of the boundary of W(A): the top-eigenvector curve point for
/// theta = 2 pi k / samples.
std::vector<Complex> boundary_polyline(const ComplexMatrix& a, int samples);

/// spectral_slice over theta = 2 pi k / samples, in theta order.
std::vector<SpectralSlice> curve_points(const ComplexMatrix& a, int samples);

}  // namespace kipp
