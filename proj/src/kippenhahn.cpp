#include "kipp/kippenhahn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include "kipp/linalg.hpp"

namespace kipp {

namespace {

double spectral_radius_bound(const ComplexMatrix& h, const ComplexMatrix& k) {
  return h.norm() + k.norm();
}

}  // namespace

HomoPoly3 kipp_poly_det(const ComplexMatrix& a) {
  require_valid(a);
  const auto n = static_cast<int>(a.rows());
  if (n > kMaxPolyDim) throw BadDims("kipp_poly_det supports n <= " + std::to_string(kMaxPolyDim));

  const auto [h, k] = hermitian_parts(a);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  // z runs over 2(n+1) roots of unity of radius rho; the DFT recovers the
  // coefficient of z^e exactly as a function of direction phi.
  const int z_points = 2 * (n + 1);
  const int phi_points = 2 * n + 4;
  const double rho = 1.0 + spectral_radius_bound(h, k);

  // coeff_in_z(s, e): coefficient of z^e at phi_s.
  Eigen::MatrixXd coeff_in_z(phi_points, n + 1);
  double max_sample = 0.0;
  double aliasing = 0.0;
  std::vector<std::vector<Complex>> samples(static_cast<std::size_t>(phi_points));
  for (int s = 0; s < phi_points; ++s) {
    const double phi = 2.0 * kPi * s / phi_points;
    const ComplexMatrix pencil = std::cos(phi) * h + std::sin(phi) * k;
    auto& row = samples[static_cast<std::size_t>(s)];
    row.resize(static_cast<std::size_t>(z_points));
    for (int t = 0; t < z_points; ++t) {
      const Complex z = std::polar(rho, 2.0 * kPi * t / z_points);
      row[static_cast<std::size_t>(t)] = (pencil + z * id).partialPivLu().determinant();
      max_sample = std::max(max_sample, std::abs(row[static_cast<std::size_t>(t)]));
    }
    for (int e = 0; e < z_points; ++e) {
      Complex acc = 0.0;
      for (int t = 0; t < z_points; ++t) {
        acc += row[static_cast<std::size_t>(t)] * std::polar(1.0, -2.0 * kPi * t * e / z_points);
      }
      acc /= static_cast<double>(z_points) * std::pow(rho, e);
      if (e <= n) {
        coeff_in_z(s, e) = acc.real();
      } else {
        aliasing = std::max(aliasing, std::abs(acc) * std::pow(rho, e));
      }
    }
  }

  // For each power z^e the coefficient is a homogeneous form of degree
  // m = n - e in (cos phi, sin phi); fit its m + 1 monomial coefficients.
  HomoPoly3 poly(n);
  for (int e = 0; e <= n; ++e) {
    const int m = n - e;
    Eigen::MatrixXd basis(phi_points, m + 1);
    for (int s = 0; s < phi_points; ++s) {
      const double phi = 2.0 * kPi * s / phi_points;
      for (int j = 0; j <= m; ++j) {
        basis(s, j) = std::pow(std::cos(phi), m - j) * std::pow(std::sin(phi), j);
      }
    }
    const Eigen::VectorXd fit = basis.colPivHouseholderQr().solve(coeff_in_z.col(e));
    for (int j = 0; j <= m; ++j) poly.coeff(m - j, j, e) = fit(j);
  }

  const double lead = poly.coeff(0, 0, n);
  if (std::abs(lead - 1.0) > 1e-12) {
    throw IllConditionedInterpolation("z^n coefficient is " + std::to_string(lead));
  }
  poly *= 1.0 / lead;

  double residual = aliasing;
  for (int s = 0; s < phi_points; ++s) {
    const double phi = 2.0 * kPi * s / phi_points;
    const Complex x = std::cos(phi), y = std::sin(phi);
    for (int t = 0; t < z_points; ++t) {
      const Complex z = std::polar(rho, 2.0 * kPi * t / z_points);
      residual = std::max(residual, std::abs(poly(x, y, z) - samples[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]));
    }
  }
  if (residual > 1e-8 * max_sample) {
    throw IllConditionedInterpolation("fit residual " + std::to_string(residual) + " against sample scale " +
                                      std::to_string(max_sample));
  }
  return poly;
}

double support_function(const ComplexMatrix& a, double theta) {
  require_valid(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rotated_real_part(a, theta), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(solver.eigenvalues().size() - 1);
}

SpectralSlice spectral_slice(const ComplexMatrix& a, double theta) {
  require_valid(a);
  const auto [h, k] = hermitian_parts(a);
  const ComplexMatrix pencil = std::cos(theta) * h + std::sin(theta) * k;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(pencil);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("Hermitian eigensolver failed");

  SpectralSlice slice;
  slice.theta = theta;
  slice.eigenvalues = solver.eigenvalues();
  slice.eigenvectors = solver.eigenvectors();
  const auto n = a.rows();
  slice.curve_points.resize(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const auto u = slice.eigenvectors.col(c);
    const double hr = u.dot(h * u).real();
    const double kr = u.dot(k * u).real();
    slice.curve_points(c) = Complex(hr, kr);
  }
  for (Eigen::Index c = 0; c + 1 < n; ++c) {
    if (slice.eigenvalues(c + 1) - slice.eigenvalues(c) < kDegenerateGap) slice.degenerate = true;
  }
  return slice;
}

std::vector<Complex> boundary_polyline(const ComplexMatrix& a, int samples) {
  if (samples < 8) throw std::invalid_argument("boundary_polyline needs at least 8 samples");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    const SpectralSlice slice = spectral_slice(a, 2.0 * kPi * s / samples);
    out.push_back(slice.curve_points(slice.curve_points.size() - 1));
  }
  return out;
}

std::vector<SpectralSlice> curve_points(const ComplexMatrix& a, int samples) {
  if (samples < 1) throw std::invalid_argument("curve_points needs a positive sample count");
  std::vector<SpectralSlice> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) out.push_back(spectral_slice(a, 2.0 * kPi * s / samples));
  return out;
}

}  // namespace kipp
