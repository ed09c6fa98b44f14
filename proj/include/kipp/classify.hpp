#pragma once

#include <array>
#include <string>
#include <vector>

#include "kipp/homogeneous_polynomial.hpp"
#include "kipp/types.hpp"

namespace kipp {

/// Circular-disc model of W(A): support h(theta) ~ r + Re(e^{-i theta} a).
struct DiscFit {
  Complex center{0.0, 0.0};
  double radius = 0.0;
  double residual = 0.0;  // max |h(theta) - model(theta)|
};

inline constexpr double kDiscTol = 1e-8;
inline constexpr double kMinDiscRadius = 1e-6;

/// Least-squares fit on `samples` uniform angles. The residual is the
/// maximum deviation over the grid, sharpened by a golden-section search
/// around the largest grid deviations so that it does not depend on where
/// the grid happens to fall.
DiscFit fit_disc(const ComplexMatrix& a, int samples);

/// residual < tol * max(1, r) and r > kMinDiscRadius.
bool is_circular(const DiscFit& fit, double tol = kDiscTol);

struct Division {
  HomoPoly3 quotient;
  double residual_norm = 0.0;  // max |remainder coeff| / max |P coeff|
};

/// Divides P by (alpha x + beta y + z), lambda = alpha + i beta.
Division divide_linear(const HomoPoly3& p, Complex lambda);

/// alpha x + beta y + z
HomoPoly3 linear_factor(Complex lambda);

/// l_i l_j - (r^2 / 4)(x^2 + y^2)
HomoPoly3 ellipse_quadratic(Complex li, Complex lj, double r);

/// Cubic factor of a 3x3 block with a flat boundary portion at (theta, mu):
/// l_w l_t l_v - (x^2+y^2) sum l_w mu_t mu_v + 2 (x^2+y^2) mu_w mu_t mu_v (x cos theta + y sin theta).
HomoPoly3 flat_cubic(Complex lw, Complex lt, Complex lv, double theta, double mu);

struct EllipseFactor {
  double minor_axis = 0.0;
  HomoPoly3 quotient;
  double residual_norm = 0.0;
};

/// Finds r with ellipse_quadratic(li, lj, r) dividing P as well as possible.
/// The remainder is polynomial in rho = r^2 / 4; rho minimizes its squared
/// coefficient norm, preferring the larger rho among exact fits.
/// Throws NegativeMinorAxisSquared when the best rho is below -tol.
EllipseFactor fit_ellipse_factor(const HomoPoly3& p, Complex li, Complex lj, double tol = 1e-9);

struct FlatCandidate {
  double theta = 0.0;  // in [0, 2 pi)
  double mu = 0.0;     // minus the repeated eigenvalue of Re(e^{-i theta} A)
  double gap = 0.0;    // refined eigenvalue gap
};

/// Eigenvalue collisions of Re(e^{-i theta} A) over theta. (theta, mu) and
/// (theta + pi, -mu) describe the same line; the returned representative
/// has more eigenvalues above the repeated value than below, or theta in
/// [0, pi) when the counts tie.
std::vector<FlatCandidate> detect_flat(const ComplexMatrix& a, int grid = 256, double tol = 1e-7);

struct CurveComponent {
  enum class Kind { Point, Ellipse, QuarticFlat, Unclassified };

  Kind kind = Kind::Unclassified;
  std::vector<Complex> foci;  // Point: 1, Ellipse: 2, QuarticFlat: 3
  double minor_axis = 0.0;
  double theta = 0.0;
  double mu = 0.0;
  int residual_degree = 0;
  HomoPoly3 factor;  // polynomial this component contributes to p_A
  double residual = 0.0;

  static CurveComponent point(Complex lambda);
  static CurveComponent ellipse(Complex li, Complex lj, double r);
  static CurveComponent quartic_flat(Complex lw, Complex lt, Complex lv, double theta, double mu);
};

std::string to_string(CurveComponent::Kind kind);

/// Decomposes C_R(A) of a 5x5 matrix into points, ellipses and a quartic with
/// a flat portion; anything else is left as Unclassified.
std::vector<CurveComponent> classify_curve(const ComplexMatrix& a, double tol = 1e-9);

}  // namespace kipp
