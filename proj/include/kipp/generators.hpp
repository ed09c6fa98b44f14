#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "kipp/types.hpp"

namespace kipp {

/// Same seed and parameters give a bit-identical matrix.
struct Seed {
  std::uint64_t value = 0;
};

/// Independent child seed for work item `index` (splitmix64 mixing).
Seed derive_seed(Seed base, std::uint64_t index);

/// Engine used by every seeded generator.
std::mt19937_64 make_engine(Seed seed);

/// QR of a complex Gaussian matrix with the phases of diag(R) moved into Q.
ComplexMatrix haar_unitary(int n, Seed seed);

ComplexMatrix jordan_shift(int n);

/// [a 0; 0 b]
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// [[l1, r], [0, l2]] (+) [[l3, s], [0, l4]] (+) [l5]
ComplexMatrix two_ellipse_block(const std::array<Complex, 5>& l, double r, double s);

/// The S_5 family with eigenvalues {a, a, 0, b, c}. Throws ParameterOutOfDisc
/// unless 0 <= a < 1, |b| < 1, |c| < 1.
ComplexMatrix s5_family(double a, Complex b, Complex c);

/// Upper triangular [[l3, a, b], [0, l4, c], [0, 0, l5]] with
/// Re(e^{-i theta} C) + mu I of rank one. |a| = 2 sqrt(mu3 mu4),
/// |b| = 2 sqrt(mu3 mu5) with free phases; c is then forced.
/// Throws InfeasibleMu unless every mu_j = Re(e^{-i theta} l_j) + mu > 0.
ComplexMatrix flat_3x3(Complex l3, Complex l4, Complex l5, double theta, double mu, double phase_a = 0.0,
                       double phase_b = 0.0);

/// U [0_{n x m} | V] U^* with V the first n - m columns of a Haar unitary.
ComplexMatrix random_partial_isometry(int n, int ker_dim, Seed seed);

/// Entries of the dim ker = 2 pattern
///   [[0, 0, k, l, t], [0, 0, g, h, j], [0, 0, b, e, f], [0, 0, 0, a, d], [0, 0, 0, 0, a]].
struct Ker2Entries {
  Complex k, l, t, g, h, j, b, e, f, d;
  double a = 0.0;

  static Ker2Entries from_matrix(const ComplexMatrix& m);
  ComplexMatrix matrix() const;
};

/// Partial isometry in the dim ker = 2 pattern, built column by column as an
/// isometry [B; C] with a in [0.2, 0.8]. With `b_equals_a` the (3,3) entry is
/// planted equal to a.
ComplexMatrix ker2_family(Seed seed, bool b_equals_a = false);

/// Upper triangular n x n with entries uniform in the unit disc.
ComplexMatrix random_upper_triangular(int n, Seed seed, double scale = 1.0);

/// Dense n x n with entries uniform in the unit disc.
ComplexMatrix random_matrix(int n, Seed seed, double scale = 1.0);

/// Uniform point of the disc of the given radius.
Complex random_in_disc(std::mt19937_64& engine, double radius = 1.0);

}  // namespace kipp
