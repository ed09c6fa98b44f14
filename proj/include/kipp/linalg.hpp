#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "kipp/types.hpp"

namespace kipp {

/// Hermitian parts of a square matrix: A = H + iK with
/// H = (A + A*)/2 and K = (A - A*)/(2i).
template <typename Derived>
auto hermitian_parts(const Eigen::MatrixBase<Derived>& a) {
  using MatrixType = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using S = typename Derived::Scalar;
  MatrixType h = (a + a.adjoint()) / S(2);
  MatrixType k = (a - a.adjoint()) / S(0, 2);
  return std::pair<MatrixType, MatrixType>{std::move(h), std::move(k)};
}

/// cos(theta) H + sin(theta) K, i.e. Re(e^{-i theta} A).
template <typename Derived>
auto rotated_real_part(const Eigen::MatrixBase<Derived>& a, double theta) {
  using MatrixType = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const typename Derived::Scalar phase = std::polar(1.0, -theta);
  MatrixType rotated = phase * a;
  return MatrixType((rotated + rotated.adjoint()) / 2.0);
}

// kDefaultRelTol * max(1, ||A||_2).
double default_tolerance(const ComplexMatrix& a);

double operator_norm(const ComplexMatrix& a);
RealVector singular_values(const ComplexMatrix& a);

/// How the diagonal of a Schur form is ordered.
enum class EigenOrder {
  Solver,         ///< whatever the QR iteration produced
  Lexicographic,  ///< ascending real part, then imaginary part
};

struct SchurForm {
  ComplexMatrix unitary;
  ComplexMatrix triangular;
  ComplexVector eigenvalues;
};

SchurForm schur_triangularize(const ComplexMatrix& a, EigenOrder order = EigenOrder::Lexicographic);

/// Schur form whose diagonal follows `target` as closely as possible: each
/// target value in turn claims the nearest unclaimed eigenvalue.
SchurForm schur_triangularize(const ComplexMatrix& a, std::span<const Complex> target);

/// Moves diagonal entries of an upper-triangular T (with A = U T U*) by
/// adjacent unitary swaps so that position i receives old position perm[i].
void reorder_schur(SchurForm& form, std::span<const int> perm);

bool is_upper_triangular(const ComplexMatrix& t, double tol = 0.0);

/// ||A A* A - A||_F <= tol.
bool is_partial_isometry(const ComplexMatrix& a, double tol);

/// Contraction, spectrum inside the open disc (|lambda| < 1 - tol) and
/// rank(I - A*A) = 1.
bool is_class_Sn(const ComplexMatrix& a, double tol);

enum class Reducibility { Irreducible, Reducible, Indeterminate };

/// Dimension test on the joint commutant {X : XA = AX, XA* = A*X}.
/// Singular values of the stacked system inside (tol, 100 tol] make the
/// verdict Indeterminate.
Reducibility reducibility(const ComplexMatrix& a, double tol);
bool is_irreducible(const ComplexMatrix& a, double tol);

/// Number of singular values <= tol.
int kernel_dimension(const ComplexMatrix& a, double tol);

/// A = basis * [[0_m, B], [0, C]] * basis^*, ker A spanned by the first m
/// columns of basis.
struct BlockForm {
  int kernel_dim = 0;
  ComplexMatrix b;      // m x (n-m)
  ComplexMatrix c;      // (n-m) x (n-m)
  ComplexMatrix basis;  // n x n unitary

  ComplexMatrix assembled() const;
};

BlockForm block_form(const ComplexMatrix& a, double tol);

struct Reduction {
  int zero_summand_dim = 0;
  ComplexMatrix reduced;
};

/// Splits off the zero direct summand of a partial isometry: when
/// k = rank B < m, A ~ 0_{m-k} (+) [[0_k, B1], [0, C]]. This also covers the
/// m > floor(n/2) case, where rank B <= n - m forces a summand of size
/// at least 2m - n.
Reduction reduce_partial_isometry(const ComplexMatrix& a, double tol);

}  // namespace kipp
